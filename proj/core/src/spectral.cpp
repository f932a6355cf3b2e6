#include "fk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fk {

DirichletSystem dirichlet_laplacian(const BoundaryGraph& g) {
    DirichletSystem sys;
    sys.interior = g.interior_vertices();
    const int m = static_cast<int>(sys.interior.size());
    std::vector<int> row(g.vertex_count(), -1);
    for (int i = 0; i < m; ++i) row[sys.interior[i]] = i;

    sys.matrix = SymMatrix::zero(m);
    for (int i = 0; i < m; ++i)
        sys.matrix.at(i, i) = g.degrees()[sys.interior[i]];
    for (const auto& [u, v] : g.edges()) {
        if (row[u] >= 0 && row[v] >= 0) {
            sys.matrix.at(row[u], row[v]) = -1.0;
            sys.matrix.at(row[v], row[u]) = -1.0;
        }
    }
    return sys;
}

namespace detail {

EigenDecomposition jacobi_eigensolve(SymMatrix m, double tol, int max_sweeps) {
    const int n = m.n;
    if (n == 0) return {};
    if (tol <= 0) throw std::invalid_argument("jacobi tolerance must be positive");

    std::vector<double> vec(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vec[std::size_t(i) * n + i] = 1.0;
    std::vector<double> d(n), b(n), z(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = b[i] = m.at(i, i);

    auto& a = m.a;
    const auto idx = [n](int i, int j) { return std::size_t(i) * n + j; };

    bool done = false;
    for (int sweep = 1; sweep <= max_sweeps && !done; ++sweep) {
        double sm = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) sm += std::fabs(a[idx(p, q)]);
        if (sm == 0.0 || sm < tol) {
            done = true;
            break;
        }
        const double tresh = sweep < 4 ? 0.2 * sm / (double(n) * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double& apq = a[idx(p, q)];
                const double g100 = 100.0 * std::fabs(apq);
                if (sweep > 4 && std::fabs(d[p]) + g100 == std::fabs(d[p]) &&
                    std::fabs(d[q]) + g100 == std::fabs(d[q])) {
                    apq = 0.0;
                } else if (std::fabs(apq) > tresh) {
                    double h = d[q] - d[p];
                    double t;
                    if (std::fabs(h) + g100 == std::fabs(h)) {
                        t = apq / h;
                    } else {
                        const double theta = 0.5 * h / apq;
                        t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    apq = 0.0;
                    const auto rot = [&](double& x, double& y) {
                        const double gx = x, hy = y;
                        x = gx - s * (hy + gx * tau);
                        y = hy + s * (gx - hy * tau);
                    };
                    for (int j = 0; j < p; ++j) rot(a[idx(j, p)], a[idx(j, q)]);
                    for (int j = p + 1; j < q; ++j) rot(a[idx(p, j)], a[idx(j, q)]);
                    for (int j = q + 1; j < n; ++j) rot(a[idx(p, j)], a[idx(q, j)]);
                    for (int j = 0; j < n; ++j) rot(vec[idx(j, p)], vec[idx(j, q)]);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if (!done) throw std::runtime_error("jacobi_eigensolve: no convergence within sweep cap");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(std::size_t(n) * n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[order[j]];
        for (int i = 0; i < n; ++i) out.vectors[idx(i, j)] = vec[idx(i, order[j])];
    }
    return out;
}

}  // namespace detail

EigenPair first_eigenpair(const BoundaryGraph& g, double tol) {
    const auto sys = dirichlet_laplacian(g);
    const int m = static_cast<int>(sys.interior.size());
    const auto eig = detail::jacobi_eigensolve(sys.matrix, tol);

    EigenPair out;
    out.lambda = eig.values.front();
    out.f.assign(g.vertex_count(), 0.0);
    for (int i = 0; i < m; ++i) out.f[sys.interior[i]] = eig.vectors[std::size_t(i) * m];

    int peak = sys.interior.front();
    for (int v : sys.interior)
        if (std::fabs(out.f[v]) > std::fabs(out.f[peak])) peak = v;
    if (out.f[peak] < 0.0)
        for (double& x : out.f) x = -x;

    double norm = 0.0;
    for (double x : out.f) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : out.f) x /= norm;

    // Lemma-level guarantees; a violation here means a solver defect.
    for (int v : sys.interior)
        if (!(out.f[v] > 0.0))
            throw std::runtime_error("first eigenfunction not strictly positive on interior");
    double residual = 0.0;
    for (int i = 0; i < m; ++i) {
        double r = -out.lambda * out.f[sys.interior[i]];
        for (int j = 0; j < m; ++j) r += sys.matrix.at(i, j) * out.f[sys.interior[j]];
        residual += r * r;
    }
    if (std::sqrt(residual) > 1e-9)
        throw std::runtime_error("eigenpair residual exceeds 1e-9");
    return out;
}

Spectrum full_spectrum(const BoundaryGraph& g, double tol) {
    const auto sys = dirichlet_laplacian(g);
    auto eig = detail::jacobi_eigensolve(sys.matrix, tol);
    if (!(eig.values.front() > 0.0))
        throw std::runtime_error("reduced Laplacian must be positive definite");
    return Spectrum{std::move(eig.values)};
}

double rayleigh_quotient(const BoundaryGraph& g, std::span<const double> f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("function size does not match vertex count");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_boundary(v) && f[v] != 0.0)
            throw std::invalid_argument("f nonzero on boundary vertex " + std::to_string(v));

    double denom = 0.0;
    for (double x : f) denom += x * x;
    if (denom == 0.0) throw std::invalid_argument("f is identically zero");

    double num = 0.0;
    for (const auto& [u, v] : g.edges()) {
        const double d = f[u] - f[v];
        num += d * d;
    }
    return num / denom;
}

}  // namespace fk
