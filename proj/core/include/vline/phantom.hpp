#pragma once

#include <array>
#include <functional>
#include <string>

#include "vline/grid.hpp"

namespace vline {

/// One weighted disc of the piecewise-constant phantom.
struct DiscSpec {
    double r = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    double w = 0.0;
};

// Closed-form component functions, exposed for tests and oracles.
double phantom1_f1(double x, double y);  // 1 + sin(pi x) cos(pi y)
double phantom1_f2(double x, double y);  // 1 + sin(pi y) cos(pi x)
double phantom2_f1(double x, double y);  // bump of radius^2 0.4 at (0.15, 0.15)
double phantom2_f2(double x, double y);  // bump of radius^2 0.3 at (0, 0.3)

const std::array<DiscSpec, 3>& phantom3_discs_f1();
const std::array<DiscSpec, 3>& phantom3_discs_f2();
double discs_value(const std::array<DiscSpec, 3>& discs, double x, double y);

VectorField phantom1(const Grid2D& grid);
VectorField phantom2(const Grid2D& grid);
VectorField phantom3(const Grid2D& grid);

/// A scalar potential with analytic partial derivatives.
struct Potential {
    std::function<double(double, double)> value;
    std::function<double(double, double)> ddx;
    std::function<double(double, double)> ddy;
};

/// The built-in test potential: W = exp(-0.3/(0.3 - x^2 - y^2)) inside the
/// disc of radius sqrt(0.3), zero outside; smooth and compactly supported
/// well inside the unit square.
Potential bump_potential();

/// Samples grad W = (dW/dx, dW/dy) from the analytic derivatives.
VectorField gradient_field(const Potential& w, const Grid2D& grid);
/// Samples the rotated gradient (-dW/dy, dW/dx).
VectorField perp_gradient_field(const Potential& w, const Grid2D& grid);

/// Components multiplied by the indicator of the disc x^2 + y^2 < radius^2.
VectorField truncate_to_disc(const VectorField& f, double radius);

/// Vector field from a square RGB image: f1 = red/255, f2 = green/255, blue
/// ignored; grid half_extent 1. Rejects unreadable or non-square images.
VectorField field_from_rgb_image(const std::string& path);

}  // namespace vline
