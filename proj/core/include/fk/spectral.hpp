#ifndef FK_SPECTRAL_HPP
#define FK_SPECTRAL_HPP

#include <span>
#include <vector>

#include "fk/graph.hpp"

namespace fk {

/// Dense symmetric matrix, row-major.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    static SymMatrix zero(int n) { return {n, std::vector<double>(std::size_t(n) * n, 0.0)}; }
    double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

/// Principal submatrix of L = D - A indexed by the interior vertices.
/// Diagonal entries are full-graph degrees (boundary edges included); this
/// realizes the zero boundary condition exactly.
struct DirichletSystem {
    SymMatrix matrix;
    std::vector<int> interior;  // interior[i] = vertex of row/column i
};

DirichletSystem dirichlet_laplacian(const BoundaryGraph& g);

/// First Dirichlet eigenvalue and its eigenfunction, indexed by vertex:
/// zero on the boundary, strictly positive on the interior, unit norm.
struct EigenPair {
    double lambda = 0.0;
    std::vector<double> f;
};

/// All eigenvalues of the reduced Laplacian, nondecreasing. Positive for
/// every connected graph with nonempty boundary.
struct Spectrum {
    std::vector<double> eigenvalues;
    double first() const { return eigenvalues.front(); }
    double gap() const { return eigenvalues[1] - eigenvalues[0]; }
};

EigenPair first_eigenpair(const BoundaryGraph& g, double tol = 1e-10);
Spectrum full_spectrum(const BoundaryGraph& g, double tol = 1e-10);

/// sum over edges (f(u)-f(v))^2 divided by sum over vertices f(v)^2.
/// f must vanish on every boundary vertex and must not be identically zero.
double rayleigh_quotient(const BoundaryGraph& g, std::span<const double> f);

namespace detail {

/// Cyclic Jacobi rotations. Eigenvalues ascending; eigenvectors returned
/// column-major (column j belongs to values[j]), orthonormal.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<double> vectors;  // n*n, column-major
};

EigenDecomposition jacobi_eigensolve(SymMatrix m, double tol = 1e-10, int max_sweeps = 10000);

}  // namespace detail

}  // namespace fk

#endif
