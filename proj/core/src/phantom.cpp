#include "vline/phantom.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "vline/errors.hpp"
#include "vline/png_io.hpp"

namespace vline {

namespace {

constexpr double kPi = std::numbers::pi;

double bump(double rho2, double r2) {
    return rho2 < r2 ? std::exp(-r2 / (r2 - rho2)) : 0.0;
}

}  // namespace

double phantom1_f1(double x, double y) { return 1.0 + std::sin(kPi * x) * std::cos(kPi * y); }
double phantom1_f2(double x, double y) { return 1.0 + std::sin(kPi * y) * std::cos(kPi * x); }

double phantom2_f1(double x, double y) {
    const double dx = x - 0.15, dy = y - 0.15;
    return bump(dx * dx + dy * dy, 0.4);
}

double phantom2_f2(double x, double y) {
    const double dy = y - 0.3;
    return bump(x * x + dy * dy, 0.3);
}

const std::array<DiscSpec, 3>& phantom3_discs_f1() {
    static const std::array<DiscSpec, 3> discs = {{{0.25, 0.1, 0.3, 0.3},
                                                   {0.35, 0.0, -0.1, 0.9},
                                                   {0.3, -0.2, 0.3, 0.7}}};
    return discs;
}

const std::array<DiscSpec, 3>& phantom3_discs_f2() {
    static const std::array<DiscSpec, 3> discs = {{{0.3, 0.2, 0.1, 0.25},
                                                   {0.2, 0.4, 0.3, 0.45},
                                                   {0.2, -0.3, 0.4, 0.9}}};
    return discs;
}

double discs_value(const std::array<DiscSpec, 3>& discs, double x, double y) {
    double v = 0.0;
    for (const DiscSpec& d : discs) {
        const double dx = x - d.cx, dy = y - d.cy;
        if (dx * dx + dy * dy < d.r * d.r) v += d.w;
    }
    return v;
}

VectorField phantom1(const Grid2D& grid) {
    return {sample_scalar(grid, phantom1_f1), sample_scalar(grid, phantom1_f2)};
}

VectorField phantom2(const Grid2D& grid) {
    return {sample_scalar(grid, phantom2_f1), sample_scalar(grid, phantom2_f2)};
}

VectorField phantom3(const Grid2D& grid) {
    return {sample_scalar(grid, [](double x, double y) {
                return discs_value(phantom3_discs_f1(), x, y);
            }),
            sample_scalar(grid, [](double x, double y) {
                return discs_value(phantom3_discs_f2(), x, y);
            })};
}

Potential bump_potential() {
    constexpr double r2 = 0.3;
    Potential w;
    w.value = [](double x, double y) { return bump(x * x + y * y, r2); };
    // d/dx exp(-r2/(r2 - rho2)) = value * (-2 r2 x) / (r2 - rho2)^2
    w.ddx = [](double x, double y) {
        const double rho2 = x * x + y * y;
        if (rho2 >= r2) return 0.0;
        const double denom = r2 - rho2;
        return bump(rho2, r2) * (-2.0 * r2 * x) / (denom * denom);
    };
    w.ddy = [](double x, double y) {
        const double rho2 = x * x + y * y;
        if (rho2 >= r2) return 0.0;
        const double denom = r2 - rho2;
        return bump(rho2, r2) * (-2.0 * r2 * y) / (denom * denom);
    };
    return w;
}

VectorField gradient_field(const Potential& w, const Grid2D& grid) {
    return {sample_scalar(grid, w.ddx), sample_scalar(grid, w.ddy)};
}

VectorField perp_gradient_field(const Potential& w, const Grid2D& grid) {
    return {sample_scalar(grid, [&](double x, double y) { return -w.ddy(x, y); }),
            sample_scalar(grid, w.ddx)};
}

VectorField truncate_to_disc(const VectorField& f, double radius) {
    if (!(radius > 0.0)) throw ConfigError("truncation radius must be positive");
    const double r2 = radius * radius;
    const Grid2D& g = f.grid();
    VectorField out = f;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const Vec2 p = g.center(i, j);
            if (p.dot(p) >= r2) {
                out.f1().at(i, j) = 0.0;
                out.f2().at(i, j) = 0.0;
            }
        }
    return out;
}

VectorField field_from_rgb_image(const std::string& path) {
    const ImageRGB img = read_png_rgb(path);
    if (img.width != img.height) {
        std::ostringstream os;
        os << "image must be square, got " << img.width << "x" << img.height << ": " << path;
        throw ConfigError(os.str());
    }
    const Grid2D grid = make_grid(img.width, 1.0);
    VectorField f(grid);
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j) {
            const unsigned char* p = img.px(i, grid.n - 1 - j);
            f.f1().at(i, j) = p[0] / 255.0;
            f.f2().at(i, j) = p[1] / 255.0;
        }
    return f;
}

}  // namespace vline
