#include "vline/recon.hpp"

#include <cmath>
#include <vector>

#include "vline/beam.hpp"
#include "vline/diffops.hpp"
#include "vline/errors.hpp"

namespace vline {

Grid2D padded_grid(const Grid2D& grid, double pad_factor) {
    if (!(pad_factor >= 1.0)) throw ConfigError("pad_factor must be >= 1");
    const int rings = static_cast<int>(std::ceil((pad_factor - 1.0) * grid.n / 2.0));
    if (rings == 0) return grid;
    Grid2D out = grid;
    out.n = grid.n + 2 * rings;
    out.half_extent = grid.half_extent + rings * grid.spacing;
    out.spacing = grid.spacing;
    return out;
}

double required_pad_factor(const VLineGeometry& g, double support_radius, const Grid2D& grid) {
    const double H = grid.half_extent;
    double needed = H;
    for (const Vec2 gamma : {g.u, g.v}) {
        const Vec2 gp = gamma.perp();
        const double drift = g.w.dot(gp);
        if (std::abs(drift) < 1e-9) return 4.0;  // w runs along the strip; no finite exit
        const double target = drift > 0.0 ? support_radius : -support_radius;
        for (const double cx : {-H, H})
            for (const double cy : {-H, H}) {
                const Vec2 corner{cx, cy};
                const double t = (target - corner.dot(gp)) / drift;
                if (t <= 0.0) continue;
                const Vec2 exit = corner + t * g.w;
                needed = std::max({needed, std::abs(exit.x), std::abs(exit.y)});
            }
    }
    return (needed + 4.0 * grid.spacing) / H;
}

namespace {

// offset of the original block inside the aligned padded grid
int ring_offset(const Grid2D& small, const Grid2D& big) {
    if (big.n < small.n || (big.n - small.n) % 2 != 0)
        throw ConfigError("grids are not ring-aligned");
    return (big.n - small.n) / 2;
}

}  // namespace

ScalarField embed(const ScalarField& f, const Grid2D& target) {
    const int off = ring_offset(f.grid(), target);
    ScalarField out(target);
    for (int i = 0; i < f.n(); ++i)
        for (int j = 0; j < f.n(); ++j) out.at(i + off, j + off) = f.at(i, j);
    return out;
}

VectorField embed(const VectorField& f, const Grid2D& target) {
    return {embed(f.f1(), target), embed(f.f2(), target)};
}

ScalarField restrict_to(const ScalarField& padded, const Grid2D& original) {
    const int off = ring_offset(original, padded.grid());
    ScalarField out(original);
    for (int i = 0; i < original.n; ++i)
        for (int j = 0; j < original.n; ++j) out.at(i, j) = padded.at(i + off, j + off);
    return out;
}

VectorField restrict_to(const VectorField& padded, const Grid2D& original) {
    return {restrict_to(padded.f1(), original), restrict_to(padded.f2(), original)};
}

ScalarField recover_potential(const ScalarField& Tf, const VLineGeometry& g, SolveMethod method) {
    // Lap V = -(1/det) D_u D_v Tf  =>  -Lap V = (1/det) D_u D_v Tf
    const ScalarField src =
        (1.0 / g.det_vu) * directional_derivative(directional_derivative(Tf, g.v), g.u);
    return solve_dirichlet(src, method);
}

ScalarField recover_solenoidal(const ScalarField& Lf, const VLineGeometry& g, SolveMethod method) {
    // Lap W = (1/det) D_u D_v Lf  =>  -Lap W = -(1/det) D_u D_v Lf
    const ScalarField src =
        (-1.0 / g.det_vu) * directional_derivative(directional_derivative(Lf, g.v), g.u);
    return solve_dirichlet(src, method);
}

VectorField recover_from_lvt_tvt(const ScalarField& Lf, const ScalarField& Tf,
                                 const VLineGeometry& g, SolveMethod method) {
    require_same_grid(Lf.grid(), Tf.grid(), "recover_from_lvt_tvt");
    // Lap f1 = -(1/det) D_v D_u [dx Tf + dy Lf]
    // Lap f2 =  (1/det) D_v D_u [dx Lf - dy Tf]
    const ScalarField a1 = dx(Tf) + dy(Lf);
    const ScalarField a2 = dx(Lf) - dy(Tf);
    const ScalarField src1 =
        (1.0 / g.det_vu) * directional_derivative(directional_derivative(a1, g.u), g.v);
    const ScalarField src2 =
        (-1.0 / g.det_vu) * directional_derivative(directional_derivative(a2, g.u), g.v);
    return {solve_dirichlet(src1, method), solve_dirichlet(src2, method)};
}

namespace {

// shared final stage of the moment pipelines: beam map along w, D_v D_u,
// divide by |v - u|
ScalarField svl_invert(const ScalarField& integrand, const VLineGeometry& g) {
    const ScalarField mapped = xray_map(integrand, g.w);
    return (1.0 / g.vu_norm) *
           directional_derivative(directional_derivative(mapped, g.u), g.v);
}

}  // namespace

VectorField recover_from_lvt_moment(const ScalarField& Lf, const ScalarField& If,
                                    const VLineGeometry& g, const PadSpec&,
                                    MomentIntermediates* intermediates) {
    require_same_grid(Lf.grid(), If.grid(), "recover_from_lvt_moment");
    const ScalarField curl = curl_from_lvt(Lf, g);
    const ScalarField cu = xray_moment_map(curl, g.u);
    const ScalarField cv = xray_moment_map(curl, g.v);
    const ScalarField gx = dx(If);
    const ScalarField gy = dy(If);

    // signed V-line transforms of the components:
    //   SVL f1 = dx If + u2 X1_u(curl) - v2 X1_v(curl)
    //   SVL f2 = dy If - u1 X1_u(curl) + v1 X1_v(curl)
    ScalarField svl1(Lf.grid()), svl2(Lf.grid());
    for (std::size_t k = 0; k < svl1.values().size(); ++k) {
        svl1.values()[k] = gx.values()[k] + g.u.y * cu.values()[k] - g.v.y * cv.values()[k];
        svl2.values()[k] = gy.values()[k] - g.u.x * cu.values()[k] + g.v.x * cv.values()[k];
    }
    if (intermediates) *intermediates = {svl1, svl2};
    return {svl_invert(svl1, g), svl_invert(svl2, g)};
}

VectorField recover_from_tvt_moment(const ScalarField& Tf, const ScalarField& Jf,
                                    const VLineGeometry& g, const PadSpec&,
                                    MomentIntermediates* intermediates) {
    require_same_grid(Tf.grid(), Jf.grid(), "recover_from_tvt_moment");
    const ScalarField div = div_from_tvt(Tf, g);
    const ScalarField mu = xray_moment_map(div, g.u);
    const ScalarField mv = xray_moment_map(div, g.v);
    const ScalarField gx = dx(Jf);
    const ScalarField gy = dy(Jf);

    //   SVL f1 = -dy Jf - u1 X1_u(div) + v1 X1_v(div)
    //   SVL f2 =  dx Jf - u2 X1_u(div) + v2 X1_v(div)
    ScalarField svl1(Tf.grid()), svl2(Tf.grid());
    for (std::size_t k = 0; k < svl1.values().size(); ++k) {
        svl1.values()[k] = -gy.values()[k] - g.u.x * mu.values()[k] + g.v.x * mv.values()[k];
        svl2.values()[k] = gx.values()[k] - g.u.y * mu.values()[k] + g.v.y * mv.values()[k];
    }
    if (intermediates) *intermediates = {svl1, svl2};
    return {svl_invert(svl1, g), svl_invert(svl2, g)};
}

VectorField recover_from_star(const ScalarField& s_long, const ScalarField& s_trans,
                              const StarGeometry& s, FbpFilter filter) {
    require_same_grid(s_long.grid(), s_trans.grid(), "recover_from_star");
    if (s.is_symmetric()) throw ConfigError("symmetric star transforms are not invertible");

    const Sinogram dL = d_ds(radon(s_long));
    const Sinogram dT = d_ds(radon(s_trans));

    Sinogram rf1 = dL, rf2 = dT;  // same lattice, values replaced below
    const int ns = dL.num_s();
    std::vector<bool> singular(dL.num_angles(), false);
    int regular_count = 0;
    for (int a = 0; a < dL.num_angles(); ++a) {
        const QMatrix qm = q_matrix(dL.angles_deg[a], s);
        singular[a] = qm.singular;
        if (qm.singular) continue;
        ++regular_count;
        for (int k = 0; k < ns; ++k) {
            const double l = dL.at(a, k), t = dT.at(a, k);
            rf1.at(a, k) = qm.q[0][0] * l + qm.q[0][1] * t;
            rf2.at(a, k) = qm.q[1][0] * l + qm.q[1][1] * t;
        }
    }
    if (regular_count == 0) throw NumericError("every projection angle is singular for this star");

    // fill flagged rows from the nearest regular rows on either side
    for (int a = 0; a < dL.num_angles(); ++a) {
        if (!singular[a]) continue;
        int below = -1, above = -1;
        for (int b = a - 1; b >= 0; --b)
            if (!singular[b]) {
                below = b;
                break;
            }
        for (int b = a + 1; b < dL.num_angles(); ++b)
            if (!singular[b]) {
                above = b;
                break;
            }
        for (int k = 0; k < ns; ++k) {
            double v1 = 0.0, v2 = 0.0;
            int cnt = 0;
            for (int b : {below, above}) {
                if (b < 0) continue;
                v1 += rf1.at(b, k);
                v2 += rf2.at(b, k);
                ++cnt;
            }
            rf1.at(a, k) = v1 / cnt;
            rf2.at(a, k) = v2 / cnt;
        }
    }

    return {iradon(rf1, filter), iradon(rf2, filter)};
}

FieldDiagnostics field_diagnostics(const VectorField& f, double inset_radius) {
    const ScalarField c = curl_field(f);
    const ScalarField d = div_field(f);
    const Grid2D& g = f.grid();
    const double r2 = inset_radius * inset_radius;
    double c2 = 0.0, d2 = 0.0;
    int count = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const Vec2 p = g.center(i, j);
            if (p.dot(p) >= r2) continue;
            c2 += c.at(i, j) * c.at(i, j);
            d2 += d.at(i, j) * d.at(i, j);
            ++count;
        }
    if (count == 0) return {};
    return {std::sqrt(c2 / count), std::sqrt(d2 / count)};
}

}  // namespace vline
