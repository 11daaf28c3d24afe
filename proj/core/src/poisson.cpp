#include "vline/poisson.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <Eigen/SparseCholesky>
#include <Eigen/IterativeLinearSolvers>

#include "vline/errors.hpp"

namespace vline {

namespace {

// 0-based interior indices ii, jj in [1, n-2]; k = (n-2)(ii-1) + (jj-1)
// reproduces the 1-based map k = (N-2)(i-2) + (j-1).
inline int interior_index(int n, int ii, int jj) { return (n - 2) * (ii - 1) + (jj - 1); }

}  // namespace

PoissonSystem assemble(const ScalarField& source, const ScalarField& boundary) {
    require_same_grid(source.grid(), boundary.grid(), "poisson assemble");
    const Grid2D& g = source.grid();
    const int n = g.n;
    if (n < 4) throw ConfigError("poisson assembly needs grid side >= 4");
    const int m = n - 2;
    const int unknowns = m * m;
    const double h = g.spacing;
    const double inv_h2 = 1.0 / (h * h);

    PoissonSystem sys;
    sys.grid = g;
    sys.boundary = boundary;
    sys.A.resize(unknowns, unknowns);
    sys.F.resize(unknowns);

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(unknowns) * 5);
    for (int ii = 1; ii <= m; ++ii) {
        for (int jj = 1; jj <= m; ++jj) {
            const int k = interior_index(n, ii, jj);
            trips.emplace_back(k, k, 4.0);
            double f_tilde = source.at(ii, jj);
            // four neighbors: interior ones couple through A, ring ones move
            // the boundary data into the source
            const int ni[4] = {ii - 1, ii + 1, ii, ii};
            const int nj[4] = {jj, jj, jj - 1, jj + 1};
            for (int q = 0; q < 4; ++q) {
                const int ai = ni[q], aj = nj[q];
                if (ai >= 1 && ai <= m && aj >= 1 && aj <= m) {
                    trips.emplace_back(k, interior_index(n, ai, aj), -1.0);
                } else {
                    f_tilde += inv_h2 * boundary.at(ai, aj);
                }
            }
            sys.F[k] = h * h * f_tilde;
        }
    }
    sys.A.setFromTriplets(trips.begin(), trips.end());
    sys.A.makeCompressed();
    return sys;
}

PoissonSystem assemble(const ScalarField& source) {
    return assemble(source, ScalarField(source.grid()));
}

ScalarField solve(const PoissonSystem& sys, SolveMethod method) {
    const Grid2D& g = sys.grid;
    const int n = g.n;
    const int m = n - 2;
    if (method == SolveMethod::Auto)
        method = n <= 200 ? SolveMethod::Direct : SolveMethod::ConjugateGradient;

    Eigen::VectorXd U;
    if (method == SolveMethod::Direct) {
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(sys.A);
        if (solver.info() != Eigen::Success)
            throw NumericError("poisson factorization failed");
        U = solver.solve(sys.F);
        if (solver.info() != Eigen::Success) throw NumericError("poisson direct solve failed");
    } else {
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper>
            solver;
        solver.setTolerance(1e-10);
        solver.setMaxIterations(20000);
        solver.compute(sys.A);
        U = solver.solve(sys.F);
        if (solver.info() != Eigen::Success) {
            std::ostringstream os;
            os << "poisson conjugate gradient did not converge: relative residual "
               << solver.error() << " after " << solver.iterations() << " iterations";
            throw NumericError(os.str());
        }
    }

    ScalarField out = sys.boundary;
    for (int ii = 1; ii <= m; ++ii)
        for (int jj = 1; jj <= m; ++jj) out.at(ii, jj) = U[interior_index(n, ii, jj)];
    return out;
}

ScalarField solve_dirichlet(const ScalarField& source, const ScalarField& boundary,
                            SolveMethod method) {
    return solve(assemble(source, boundary), method);
}

ScalarField solve_dirichlet(const ScalarField& source, SolveMethod method) {
    return solve(assemble(source), method);
}

void dump_triplets(const PoissonSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << sys.A.rows() << " " << sys.A.cols() << " " << sys.A.nonZeros() << "\n";
    for (int k = 0; k < sys.A.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(sys.A, k); it; ++it)
            out << it.row() + 1 << " " << it.col() + 1 << " " << it.value() << "\n";
}

}  // namespace vline
