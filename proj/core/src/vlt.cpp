#include "vline/vlt.hpp"

#include <cmath>
#include <sstream>

#include "vline/errors.hpp"

namespace vline {

VLineGeometry VLineGeometry::from_directions(Vec2 u, Vec2 v) {
    VLineGeometry g;
    g.u = normalized_direction(u);
    g.v = normalized_direction(v);
    g.det_vu = g.v.x * g.u.y - g.v.y * g.u.x;
    if (std::abs(g.det_vu) <= 1e-12)
        throw ConfigError("V-line directions u and v are linearly dependent");
    g.u_perp = g.u.perp();
    g.v_perp = g.v.perp();
    const Vec2 d = g.v - g.u;
    g.vu_norm = d.norm();
    g.w = {d.x / g.vu_norm, d.y / g.vu_norm};
    return g;
}

VLineGeometry VLineGeometry::from_angles_deg(double u_deg, double v_deg) {
    return from_directions(unit_from_angle_deg(u_deg), unit_from_angle_deg(v_deg));
}

StarGeometry StarGeometry::from_angles_deg(const std::vector<double>& angles_deg,
                                           const std::vector<double>& weights) {
    if (angles_deg.empty() || angles_deg.size() != weights.size())
        throw ConfigError("star geometry needs matching, nonempty angle and weight lists");
    StarGeometry s;
    for (std::size_t i = 0; i < angles_deg.size(); ++i) {
        if (weights[i] == 0.0) throw ConfigError("star weights must be nonzero");
        s.directions.push_back(unit_from_angle_deg(angles_deg[i]));
        s.weights.push_back(weights[i]);
    }
    return s;
}

StarGeometry StarGeometry::standard() {
    return from_angles_deg({0.0, 120.0, 240.0}, {1.0, 1.0, 1.0});
}

bool StarGeometry::is_symmetric(double tol) const {
    const int m = branch_count();
    if (m % 2 != 0) return false;
    std::vector<bool> used(m, false);
    for (int i = 0; i < m; ++i) {
        if (used[i]) continue;
        bool matched = false;
        for (int j = i + 1; j < m; ++j) {
            if (used[j]) continue;
            if ((directions[i] + directions[j]).norm() < tol &&
                std::abs(weights[i] + weights[j]) < tol) {
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

ScalarField dot_field(const VectorField& f, Vec2 d) {
    ScalarField out(f.grid());
    const auto& a = f.f1().values();
    const auto& b = f.f2().values();
    for (std::size_t k = 0; k < out.values().size(); ++k)
        out.values()[k] = a[k] * d.x + b[k] * d.y;
    return out;
}

namespace {

// -mu + mv elementwise; shared by all four V-line transforms so the
// perp-intertwining identities hold bit for bit.
ScalarField v_combine(const ScalarField& mu, const ScalarField& mv) {
    ScalarField out(mu.grid());
    for (std::size_t k = 0; k < out.values().size(); ++k)
        out.values()[k] = -mu.values()[k] + mv.values()[k];
    return out;
}

}  // namespace

ScalarField lvt(const VectorField& f, const VLineGeometry& g) {
    return v_combine(xray_map(dot_field(f, g.u), g.u), xray_map(dot_field(f, g.v), g.v));
}

ScalarField tvt(const VectorField& f, const VLineGeometry& g) {
    return v_combine(xray_map(dot_field(f, g.u_perp), g.u),
                     xray_map(dot_field(f, g.v_perp), g.v));
}

ScalarField lvt1(const VectorField& f, const VLineGeometry& g, bool exact_weight) {
    return v_combine(xray_moment_map(dot_field(f, g.u), g.u, exact_weight),
                     xray_moment_map(dot_field(f, g.v), g.v, exact_weight));
}

ScalarField tvt1(const VectorField& f, const VLineGeometry& g, bool exact_weight) {
    return v_combine(xray_moment_map(dot_field(f, g.u_perp), g.u, exact_weight),
                     xray_moment_map(dot_field(f, g.v_perp), g.v, exact_weight));
}

StarData star(const VectorField& f, const StarGeometry& s) {
    StarData d{ScalarField(f.grid()), ScalarField(f.grid())};
    for (int b = 0; b < s.branch_count(); ++b) {
        const Vec2 gamma = s.directions[b];
        const double c = s.weights[b];
        const ScalarField lon = xray_map(dot_field(f, gamma), gamma);
        const ScalarField tra = xray_map(dot_field(f, gamma.perp()), gamma);
        for (std::size_t k = 0; k < lon.values().size(); ++k) {
            d.longitudinal.values()[k] += c * lon.values()[k];
            d.transversal.values()[k] += c * tra.values()[k];
        }
    }
    return d;
}

}  // namespace vline
