#pragma once

#include "vline/grid.hpp"
#include "vline/vlt.hpp"

namespace vline {

// Finite differences on the pixel-center lattice: central differences
// (phi_{k+1} - phi_{k-1}) / (2h) at interior samples, one-sided first-order
// differences at the two boundary samples.

ScalarField dx(const ScalarField& field);
ScalarField dy(const ScalarField& field);

/// (dx field, dy field) as a vector field.
VectorField grad(const ScalarField& field);

/// d . grad(field) pointwise; d is normalized internally.
ScalarField directional_derivative(const ScalarField& field, Vec2 d);

/// curl f recovered from longitudinal V-line data: (1/det(v,u)) D_u D_v Lf.
ScalarField curl_from_lvt(const ScalarField& Lf, const VLineGeometry& g);

/// div f recovered from transverse V-line data: -(1/det(v,u)) D_u D_v Tf.
ScalarField div_from_tvt(const ScalarField& Tf, const VLineGeometry& g);

/// Discrete curl / divergence of a vector field (dx f2 - dy f1, dx f1 + dy f2).
ScalarField curl_field(const VectorField& f);
ScalarField div_field(const VectorField& f);

}  // namespace vline
