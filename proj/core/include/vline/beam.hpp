#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "vline/grid.hpp"

namespace vline {

/// One pixel crossed by a ray: index, intersection length (world units),
/// the distance from the ray vertex to the pixel's center (the per-pixel
/// constant weight used by the first-moment transform), and the parameter
/// midpoint of the segment (used by the exact-moment variant).
struct RaySegment {
    int i = 0;
    int j = 0;
    double length = 0.0;
    double t_center = 0.0;
    double t_mid = 0.0;
};

/// Parameter interval of {origin + t * dir} inside the grid square, with
/// t >= t_begin. Empty when the line misses the square.
std::optional<std::pair<double, double>> clip_to_grid(const Grid2D& grid, Vec2 origin, Vec2 dir,
                                                      double t_begin);

/// Direction of unit length; throws ConfigError when |d| <= 1e-12.
Vec2 normalized_direction(Vec2 d);

namespace detail {

/// Parametric pixel walk of {origin + t dir : t in [t0, t1]} with unit dir.
/// Emits (i, j, t_in, t_out) per crossed pixel in increasing t order.
/// Entry parameters sitting exactly on pixel edges or corners are nudged by
/// +1e-12 h to break ties deterministically; exact corner crossings step
/// diagonally.
template <class Fn>
void walk_segments(const Grid2D& g, Vec2 origin, Vec2 dir, double t0, double t1, Fn&& emit) {
    const double h = g.spacing;
    t0 += 1e-12 * h;
    if (!(t1 > t0)) return;

    const Vec2 p0 = origin + t0 * dir;
    int ix = g.index_of(p0.x);
    int iy = g.index_of(p0.y);

    constexpr double inf = std::numeric_limits<double>::infinity();
    const double lo = -g.half_extent;
    const int sx = dir.x > 0.0 ? 1 : -1;
    const int sy = dir.y > 0.0 ? 1 : -1;
    double t_max_x = inf, dt_x = inf;
    if (dir.x != 0.0) {
        const double edge = lo + (ix + (dir.x > 0.0 ? 1 : 0)) * h;
        t_max_x = (edge - origin.x) / dir.x;
        dt_x = h / std::abs(dir.x);
    }
    double t_max_y = inf, dt_y = inf;
    if (dir.y != 0.0) {
        const double edge = lo + (iy + (dir.y > 0.0 ? 1 : 0)) * h;
        t_max_y = (edge - origin.y) / dir.y;
        dt_y = h / std::abs(dir.y);
    }

    double t = t0;
    const int max_steps = 4 * g.n + 8;
    for (int step = 0; step < max_steps && t < t1; ++step) {
        const double tn = std::min({t_max_x, t_max_y, t1});
        if (tn > t) emit(ix, iy, t, tn);
        if (tn >= t1) break;
        const bool step_x = t_max_x <= t_max_y;
        const bool step_y = t_max_y <= t_max_x;
        if (step_x) {
            ix += sx;
            t_max_x += dt_x;
        }
        if (step_y) {
            iy += sy;
            t_max_y += dt_y;
        }
        if (ix < 0 || ix >= g.n || iy < 0 || iy >= g.n) break;
        t = tn;
    }
}

}  // namespace detail

/// Pixel traversal of the half-line {vertex + t dir, t >= 0} clipped to the
/// grid. A ray that misses the grid yields an empty list.
std::vector<RaySegment> trace_ray(const Grid2D& grid, Vec2 vertex, Vec2 direction);

/// Divergent beam transform of a pixelized field at one vertex:
/// sum of field value times intersection length over the crossed pixels.
double xray(const ScalarField& field, Vec2 vertex, Vec2 direction);

/// First-moment beam transform. By default each pixel is weighted by the
/// distance from the vertex to the pixel center (constant per pixel, the
/// forward-data convention); exact_weight switches to the per-segment
/// parameter midpoint, which integrates t exactly over each segment.
double xray_moment(const ScalarField& field, Vec2 vertex, Vec2 direction,
                   bool exact_weight = false);

/// Beam transform maps over all pixel-center vertices.
ScalarField xray_map(const ScalarField& field, Vec2 direction);
ScalarField xray_moment_map(const ScalarField& field, Vec2 direction, bool exact_weight = false);

/// Integral of the pixelized field over the full line through `point` along
/// `direction` (both directions), used by the Radon transform.
double line_integral(const ScalarField& field, Vec2 point, Vec2 direction);

}  // namespace vline
