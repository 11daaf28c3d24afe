#include "vline/diffops.hpp"

namespace vline {

ScalarField dx(const ScalarField& field) {
    const Grid2D& g = field.grid();
    const int n = g.n;
    const double h = g.spacing;
    ScalarField out(g);
    for (int j = 0; j < n; ++j) {
        out.at(0, j) = (field.at(1, j) - field.at(0, j)) / h;
        out.at(n - 1, j) = (field.at(n - 1, j) - field.at(n - 2, j)) / h;
    }
    for (int i = 1; i < n - 1; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = (field.at(i + 1, j) - field.at(i - 1, j)) / (2.0 * h);
    return out;
}

ScalarField dy(const ScalarField& field) {
    const Grid2D& g = field.grid();
    const int n = g.n;
    const double h = g.spacing;
    ScalarField out(g);
    for (int i = 0; i < n; ++i) {
        out.at(i, 0) = (field.at(i, 1) - field.at(i, 0)) / h;
        out.at(i, n - 1) = (field.at(i, n - 1) - field.at(i, n - 2)) / h;
        for (int j = 1; j < n - 1; ++j)
            out.at(i, j) = (field.at(i, j + 1) - field.at(i, j - 1)) / (2.0 * h);
    }
    return out;
}

VectorField grad(const ScalarField& field) { return {dx(field), dy(field)}; }

ScalarField directional_derivative(const ScalarField& field, Vec2 d) {
    const Vec2 dir = normalized_direction(d);
    const ScalarField gx = dx(field);
    const ScalarField gy = dy(field);
    ScalarField out(field.grid());
    for (std::size_t k = 0; k < out.values().size(); ++k)
        out.values()[k] = dir.x * gx.values()[k] + dir.y * gy.values()[k];
    return out;
}

ScalarField curl_from_lvt(const ScalarField& Lf, const VLineGeometry& g) {
    return (1.0 / g.det_vu) * directional_derivative(directional_derivative(Lf, g.v), g.u);
}

ScalarField div_from_tvt(const ScalarField& Tf, const VLineGeometry& g) {
    return (-1.0 / g.det_vu) * directional_derivative(directional_derivative(Tf, g.v), g.u);
}

ScalarField curl_field(const VectorField& f) { return dx(f.f2()) - dy(f.f1()); }

ScalarField div_field(const VectorField& f) { return dx(f.f1()) + dy(f.f2()); }

}  // namespace vline
