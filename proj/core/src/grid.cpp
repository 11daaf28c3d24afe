#include "vline/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vline/errors.hpp"

namespace vline {

int Grid2D::index_of(double w) const {
    const int i = static_cast<int>(std::floor((w + half_extent) / spacing));
    return std::clamp(i, 0, n - 1);
}

Grid2D make_grid(int n, double half_extent) {
    if (n < 3) {
        std::ostringstream os;
        os << "grid side must be >= 3, got " << n;
        throw ConfigError(os.str());
    }
    if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
        std::ostringstream os;
        os << "grid half_extent must be positive and finite, got " << half_extent;
        throw ConfigError(os.str());
    }
    Grid2D g;
    g.n = n;
    g.half_extent = half_extent;
    g.spacing = 2.0 * half_extent / n;
    return g;
}

VectorField::VectorField(ScalarField f1, ScalarField f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {
    require_same_grid(f1_.grid(), f2_.grid(), "VectorField");
}

ScalarField sample_scalar(const Grid2D& grid, const std::function<double(double, double)>& fn) {
    ScalarField out(grid);
    for (int i = 0; i < grid.n; ++i) {
        const double xi = grid.x(i);
        for (int j = 0; j < grid.n; ++j) {
            const double v = fn(xi, grid.y(j));
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "non-finite sample at pixel (" << i << ", " << j << ") = ("
                   << xi << ", " << grid.y(j) << ")";
                throw NumericError(os.str());
            }
            out.at(i, j) = v;
        }
    }
    return out;
}

VectorField perp(const VectorField& f) {
    ScalarField c1(f.grid()), c2(f.grid());
    const auto& a = f.f1().values();
    const auto& b = f.f2().values();
    for (std::size_t k = 0; k < a.size(); ++k) {
        c1.values()[k] = -b[k];
        c2.values()[k] = a[k];
    }
    return {std::move(c1), std::move(c2)};
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* where) {
    if (!(a == b)) {
        std::ostringstream os;
        os << where << ": grids differ (n " << a.n << " vs " << b.n << ", half_extent "
           << a.half_extent << " vs " << b.half_extent << ")";
        throw ConfigError(os.str());
    }
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid(), "operator+");
    ScalarField out(a.grid());
    for (std::size_t k = 0; k < out.values().size(); ++k)
        out.values()[k] = a.values()[k] + b.values()[k];
    return out;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid(), "operator-");
    ScalarField out(a.grid());
    for (std::size_t k = 0; k < out.values().size(); ++k)
        out.values()[k] = a.values()[k] - b.values()[k];
    return out;
}

ScalarField operator-(const ScalarField& a) {
    ScalarField out(a.grid());
    for (std::size_t k = 0; k < out.values().size(); ++k) out.values()[k] = -a.values()[k];
    return out;
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField out(a.grid());
    for (std::size_t k = 0; k < out.values().size(); ++k) out.values()[k] = s * a.values()[k];
    return out;
}

}  // namespace vline
