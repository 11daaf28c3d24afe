#pragma once

#include <string>

#include <Eigen/Sparse>

#include "vline/grid.hpp"

namespace vline {

/// Five-point finite-difference system for the Dirichlet problem
///   -Lap u = f  on the pixel-center lattice,  u = g on the boundary ring.
/// Interior unknowns (1-based i, j in [2, N-1]) are flattened with
/// k = (N-2)(i-2) + (j-1), giving A a block-tridiagonal structure with
/// tridiag(-1, 4, -1) diagonal blocks and -I off-diagonal blocks (symmetric
/// positive definite). F = h^2 * f_tilde, where f_tilde folds the boundary
/// data into the source at pixels adjacent to the ring.
struct PoissonSystem {
    Grid2D grid;
    Eigen::SparseMatrix<double> A;
    Eigen::VectorXd F;
    ScalarField boundary;
};

enum class SolveMethod {
    Auto,              // direct for n <= 200, conjugate gradient above
    Direct,            // sparse Cholesky factorization
    ConjugateGradient  // diagonal-preconditioned CG, relative residual <= 1e-10
};

/// Assemble for grid side n >= 4. `source` is read at interior pixels,
/// `boundary` at the outermost pixel ring.
PoissonSystem assemble(const ScalarField& source, const ScalarField& boundary);
PoissonSystem assemble(const ScalarField& source);  // zero boundary data

/// Interior values from the linear solve; ring pixels carry the boundary data.
/// Throws NumericError (with the residual) if the iterative solver fails to
/// converge.
ScalarField solve(const PoissonSystem& system, SolveMethod method = SolveMethod::Auto);

ScalarField solve_dirichlet(const ScalarField& source, const ScalarField& boundary,
                            SolveMethod method = SolveMethod::Auto);
ScalarField solve_dirichlet(const ScalarField& source, SolveMethod method = SolveMethod::Auto);

/// Writes A in MatrixMarket coordinate format (1-based "i j value" triplets).
void dump_triplets(const PoissonSystem& system, const std::string& path);

}  // namespace vline
