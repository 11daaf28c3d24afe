#pragma once

#include "vline/grid.hpp"
#include "vline/poisson.hpp"
#include "vline/radon.hpp"
#include "vline/vlt.hpp"

namespace vline {

/// Padding for the moment pipelines: forward data is produced on a grid
/// enlarged by pad_factor (same pixel size, whole rings added) so the
/// direction-w integrals and back-rays stay inside available data; inputs
/// are truncated to support_radius.
struct PadSpec {
    double pad_factor = 1.0;
    double support_radius = 0.9;
};

/// Grid enlarged to at least pad_factor times the half extent by adding an
/// integer number of pixel rings (identical spacing, centers aligned).
Grid2D padded_grid(const Grid2D& grid, double pad_factor);

/// Smallest pad factor for which the direction-w integrals of the moment
/// pipelines stay inside available data. V-line data of a field supported in
/// the disc of radius support_radius rides on two half-infinite strips along
/// -u and -v; a w-ray from any pixel of the original square must leave both
/// strips before it leaves the padded square, otherwise the truncated tail
/// corrupts the inversion. (Default geometry: half_extent + sqrt(2) r_s,
/// i.e. pad 2.28 for r_s = 0.9 — the nominal factor 2 cuts the tails off.)
double required_pad_factor(const VLineGeometry& g, double support_radius, const Grid2D& grid);

/// Zero-extends a field onto an aligned larger grid.
ScalarField embed(const ScalarField& f, const Grid2D& target);
VectorField embed(const VectorField& f, const Grid2D& target);

/// Central block of a padded field on the original grid.
ScalarField restrict_to(const ScalarField& padded, const Grid2D& original);
VectorField restrict_to(const VectorField& padded, const Grid2D& original);

/// Pipeline 1a: potential V (f = grad V) from transverse data, via
/// Lap V = -(1/det(v,u)) D_u D_v Tf and a zero-boundary Dirichlet solve.
ScalarField recover_potential(const ScalarField& Tf, const VLineGeometry& g,
                              SolveMethod method = SolveMethod::Auto);

/// Pipeline 1b: stream potential W (f = perp-grad W) from longitudinal data,
/// via Lap W = (1/det(v,u)) D_u D_v Lf.
ScalarField recover_solenoidal(const ScalarField& Lf, const VLineGeometry& g,
                               SolveMethod method = SolveMethod::Auto);

/// Pipeline 2: full field from (Lf, Tf) through the component Laplacians.
VectorField recover_from_lvt_tvt(const ScalarField& Lf, const ScalarField& Tf,
                                 const VLineGeometry& g, SolveMethod method = SolveMethod::Auto);

/// The signed V-line transforms of f1 and f2 recovered as the moment
/// pipelines' intermediate.
struct MomentIntermediates {
    ScalarField svl1;
    ScalarField svl2;
};

/// Pipeline 3: full field from (Lf, If); inputs must live on the padded
/// grid. Steps per component: curl from Lf, first-moment beam maps of the
/// curl along u and v, gradient of If, integrand assembly, beam map along w,
/// then D_v D_u / |v - u|.
VectorField recover_from_lvt_moment(const ScalarField& Lf, const ScalarField& If,
                                    const VLineGeometry& g, const PadSpec& pad,
                                    MomentIntermediates* intermediates = nullptr);

/// Pipeline 4: mirror of pipeline 3 from (Tf, Jf) via the divergence.
VectorField recover_from_tvt_moment(const ScalarField& Tf, const ScalarField& Jf,
                                    const VLineGeometry& g, const PadSpec& pad,
                                    MomentIntermediates* intermediates = nullptr);

/// Pipeline 5: full field from the star data channels: component-wise Radon,
/// d/ds, per-angle Q(psi) mix, component-wise filtered backprojection.
/// Sinogram rows at singular angles are filled by averaging the nearest
/// non-singular neighbors.
VectorField recover_from_star(const ScalarField& s_long, const ScalarField& s_trans,
                              const StarGeometry& s, FbpFilter filter = FbpFilter::Ramp);

/// Interior curl/divergence magnitudes of a reconstructed field, for
/// detecting misuse of the special-field pipelines.
struct FieldDiagnostics {
    double curl_l2 = 0.0;
    double div_l2 = 0.0;
};
FieldDiagnostics field_diagnostics(const VectorField& f, double inset_radius);

}  // namespace vline
