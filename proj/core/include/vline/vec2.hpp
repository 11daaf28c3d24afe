#pragma once

#include <cmath>

namespace vline {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    /// 90-degree counter-clockwise rotation: (x, y) -> (-y, x).
    constexpr Vec2 perp() const { return {-y, x}; }
    double norm() const { return std::hypot(x, y); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline Vec2 unit_from_angle(double radians) {
    return {std::cos(radians), std::sin(radians)};
}

inline Vec2 unit_from_angle_deg(double degrees) {
    return unit_from_angle(degrees * 3.14159265358979323846 / 180.0);
}

}  // namespace vline
