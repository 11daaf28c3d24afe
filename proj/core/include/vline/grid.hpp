#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vline/vec2.hpp"

namespace vline {

/// Uniform pixelization of the centered square [-half_extent, half_extent]^2.
/// Pixel (i, j) (0-based) has its center at (x(i), y(j)) with
///   x(i) = -half_extent + (i + 1/2) h,   h = 2 half_extent / n,
/// so all pixel centers lie strictly inside the square.
struct Grid2D {
    int n = 0;
    double half_extent = 1.0;
    double spacing = 0.0;

    double x(int i) const { return -half_extent + (i + 0.5) * spacing; }
    double y(int j) const { return -half_extent + (j + 0.5) * spacing; }
    Vec2 center(int i, int j) const { return {x(i), y(j)}; }

    /// Pixel index along one axis containing world coordinate w, clamped to [0, n-1].
    int index_of(double w) const;

    bool operator==(const Grid2D&) const = default;
};

/// n >= 3, half_extent > 0; throws ConfigError otherwise.
Grid2D make_grid(int n, double half_extent = 1.0);

/// Samples at the pixel centers of a Grid2D. values()[i*n + j] holds the
/// sample at (x(i), y(j)): the first index runs over x, the second over y.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const Grid2D& grid)
        : grid_(grid), values_(static_cast<std::size_t>(grid.n) * grid.n, 0.0) {}

    const Grid2D& grid() const { return grid_; }
    int n() const { return grid_.n; }

    double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * grid_.n + j]; }
    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * grid_.n + j]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

  private:
    Grid2D grid_;
    std::vector<double> values_;
};

/// Two scalar components (f1, f2) on one shared grid.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(const Grid2D& grid) : f1_(grid), f2_(grid) {}
    VectorField(ScalarField f1, ScalarField f2);

    const Grid2D& grid() const { return f1_.grid(); }
    ScalarField& f1() { return f1_; }
    ScalarField& f2() { return f2_; }
    const ScalarField& f1() const { return f1_; }
    const ScalarField& f2() const { return f2_; }

  private:
    ScalarField f1_, f2_;
};

/// values[i][j] = fn(x_i, y_j); throws NumericError naming the pixel if fn
/// returns a non-finite value.
ScalarField sample_scalar(const Grid2D& grid, const std::function<double(double, double)>& fn);

/// Pointwise rotation (f1, f2) -> (-f2, f1).
VectorField perp(const VectorField& f);

// Elementwise arithmetic (grids must match).
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(double s, const ScalarField& a);

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* where);

}  // namespace vline
