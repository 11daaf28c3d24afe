#pragma once

#include <vector>

#include "vline/beam.hpp"
#include "vline/grid.hpp"

namespace vline {

/// The two fixed ray directions of a V-line and derived quantities.
/// Defaults: u at 45 degrees, v at 135 degrees, for which det(v, u) = -1
/// and w = (v - u)/|v - u| = (-1, 0).
struct VLineGeometry {
    Vec2 u, v;
    Vec2 u_perp, v_perp;
    Vec2 w;
    double det_vu = 0.0;  // v.x * u.y - v.y * u.x
    double vu_norm = 0.0;  // |v - u|

    static VLineGeometry from_directions(Vec2 u, Vec2 v);
    static VLineGeometry from_angles_deg(double u_deg, double v_deg);
    static VLineGeometry standard() { return from_angles_deg(45.0, 135.0); }
};

/// Star branch directions and nonzero weights; defaults to three branches at
/// polar angles 0, 120, 240 degrees with unit weights.
struct StarGeometry {
    std::vector<Vec2> directions;
    std::vector<double> weights;

    static StarGeometry from_angles_deg(const std::vector<double>& angles_deg,
                                        const std::vector<double>& weights);
    static StarGeometry standard();

    int branch_count() const { return static_cast<int>(directions.size()); }

    /// True when the branches pair up as gamma_i = -gamma_j with c_i = -c_j;
    /// the only star configuration whose inversion matrix is undefined.
    bool is_symmetric(double tol = 1e-9) const;
};

/// Pointwise projection f . d as a scalar field.
ScalarField dot_field(const VectorField& f, Vec2 d);

/// Longitudinal V-line transform: -X_u(f.u) + X_v(f.v) over pixel-center vertices.
ScalarField lvt(const VectorField& f, const VLineGeometry& g);
/// Transverse V-line transform: -X_u(f.u_perp) + X_v(f.v_perp).
ScalarField tvt(const VectorField& f, const VLineGeometry& g);
/// First-moment variants (X^1 in place of X).
ScalarField lvt1(const VectorField& f, const VLineGeometry& g, bool exact_weight = false);
ScalarField tvt1(const VectorField& f, const VLineGeometry& g, bool exact_weight = false);

/// Vector star transform: longitudinal channel sum c_i X_{gamma_i}(f.gamma_i)
/// and transversal channel sum c_i X_{gamma_i}(f.gamma_i_perp).
struct StarData {
    ScalarField longitudinal;
    ScalarField transversal;
};
StarData star(const VectorField& f, const StarGeometry& s);

}  // namespace vline
