#include "vline/beam.hpp"

#include <cmath>

#include "vline/errors.hpp"
#include "vline/parallel.hpp"

namespace vline {

Vec2 normalized_direction(Vec2 d) {
    const double n = d.norm();
    if (!(n > 1e-12)) throw ConfigError("ray direction must be nonzero");
    return {d.x / n, d.y / n};
}

std::optional<std::pair<double, double>> clip_to_grid(const Grid2D& grid, Vec2 origin, Vec2 dir,
                                                      double t_begin) {
    const double H = grid.half_extent;
    double t0 = t_begin;
    double t1 = std::numeric_limits<double>::infinity();
    const double o[2] = {origin.x, origin.y};
    const double d[2] = {dir.x, dir.y};
    for (int a = 0; a < 2; ++a) {
        if (d[a] == 0.0) {
            if (o[a] <= -H || o[a] >= H) return std::nullopt;
            continue;
        }
        const double ta = (-H - o[a]) / d[a];
        const double tb = (H - o[a]) / d[a];
        t0 = std::max(t0, std::min(ta, tb));
        t1 = std::min(t1, std::max(ta, tb));
    }
    if (!(t1 > t0)) return std::nullopt;
    return std::make_pair(t0, t1);
}

std::vector<RaySegment> trace_ray(const Grid2D& grid, Vec2 vertex, Vec2 direction) {
    const Vec2 dir = normalized_direction(direction);
    std::vector<RaySegment> segs;
    const auto clip = clip_to_grid(grid, vertex, dir, 0.0);
    if (!clip) return segs;
    detail::walk_segments(grid, vertex, dir, clip->first, clip->second,
                          [&](int i, int j, double t_in, double t_out) {
                              RaySegment s;
                              s.i = i;
                              s.j = j;
                              s.length = t_out - t_in;
                              s.t_center = (grid.center(i, j) - vertex).norm();
                              s.t_mid = 0.5 * (t_in + t_out);
                              segs.push_back(s);
                          });
    return segs;
}

double xray(const ScalarField& field, Vec2 vertex, Vec2 direction) {
    const Vec2 dir = normalized_direction(direction);
    const Grid2D& g = field.grid();
    const auto clip = clip_to_grid(g, vertex, dir, 0.0);
    if (!clip) return 0.0;
    double sum = 0.0;
    detail::walk_segments(g, vertex, dir, clip->first, clip->second,
                          [&](int i, int j, double t_in, double t_out) {
                              sum += field.at(i, j) * (t_out - t_in);
                          });
    return sum;
}

double xray_moment(const ScalarField& field, Vec2 vertex, Vec2 direction, bool exact_weight) {
    const Vec2 dir = normalized_direction(direction);
    const Grid2D& g = field.grid();
    const auto clip = clip_to_grid(g, vertex, dir, 0.0);
    if (!clip) return 0.0;
    double sum = 0.0;
    if (exact_weight) {
        detail::walk_segments(g, vertex, dir, clip->first, clip->second,
                              [&](int i, int j, double t_in, double t_out) {
                                  sum += field.at(i, j) * 0.5 * (t_in + t_out) * (t_out - t_in);
                              });
    } else {
        detail::walk_segments(g, vertex, dir, clip->first, clip->second,
                              [&](int i, int j, double t_in, double t_out) {
                                  const double d = (g.center(i, j) - vertex).norm();
                                  sum += field.at(i, j) * d * (t_out - t_in);
                              });
    }
    return sum;
}

ScalarField xray_map(const ScalarField& field, Vec2 direction) {
    const Vec2 dir = normalized_direction(direction);
    const Grid2D& g = field.grid();
    ScalarField out(g);
    parallel_for(g.n, [&](int i) {
        for (int j = 0; j < g.n; ++j) out.at(i, j) = xray(field, g.center(i, j), dir);
    });
    return out;
}

ScalarField xray_moment_map(const ScalarField& field, Vec2 direction, bool exact_weight) {
    const Vec2 dir = normalized_direction(direction);
    const Grid2D& g = field.grid();
    ScalarField out(g);
    parallel_for(g.n, [&](int i) {
        for (int j = 0; j < g.n; ++j)
            out.at(i, j) = xray_moment(field, g.center(i, j), dir, exact_weight);
    });
    return out;
}

double line_integral(const ScalarField& field, Vec2 point, Vec2 direction) {
    const Vec2 dir = normalized_direction(direction);
    const Grid2D& g = field.grid();
    const auto clip =
        clip_to_grid(g, point, dir, -std::numeric_limits<double>::infinity());
    if (!clip) return 0.0;
    double sum = 0.0;
    detail::walk_segments(g, point, dir, clip->first, clip->second,
                          [&](int i, int j, double t_in, double t_out) {
                              sum += field.at(i, j) * (t_out - t_in);
                          });
    return sum;
}

}  // namespace vline
