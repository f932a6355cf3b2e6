#include <doctest.h>

#include <cmath>
#include <random>

#include "fk/examples.hpp"
#include "fk/spectral.hpp"
#include "fk/suites.hpp"
#include "support/sturm.hpp"

using namespace fk;

namespace {

BoundaryGraph triangle_with_pendants() {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("reduced Laplacian of the triangle with pendants is 3I - A(C3)") {
    const auto sys = dirichlet_laplacian(triangle_with_pendants());
    REQUIRE(sys.matrix.n == 3);
    CHECK(sys.interior == std::vector<int>{0, 1, 2});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(sys.matrix.at(i, j) == (i == j ? 3.0 : -1.0));
}

TEST_CASE("diagonal carries full-graph degrees, off-diagonal interior adjacency") {
    const auto sys = dirichlet_laplacian(examples::g1());
    REQUIRE(sys.matrix.n == 7);
    std::multiset<double> diag;
    for (int i = 0; i < 7; ++i) diag.insert(sys.matrix.at(i, i));
    CHECK(diag == std::multiset<double>{2, 2, 2, 3, 3, 4, 5});
    // each interior-interior edge contributes exactly one symmetric -1 pair
    double off_sum = 0.0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (i != j) {
                CHECK((sys.matrix.at(i, j) == 0.0 || sys.matrix.at(i, j) == -1.0));
                CHECK(sys.matrix.at(i, j) == sys.matrix.at(j, i));
                off_sum += sys.matrix.at(i, j);
            }
    int interior_edges = 0;
    for (const auto& [u, v] : examples::g1().edges())
        interior_edges += examples::g1().is_interior(u) && examples::g1().is_interior(v);
    CHECK(off_sum == -2.0 * interior_edges);
}

TEST_CASE("triangle with pendants has spectrum 1, 4, 4") {
    const auto g = triangle_with_pendants();
    const auto spectrum = full_spectrum(g);
    REQUIRE(spectrum.eigenvalues.size() == 3);
    CHECK(spectrum.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(spectrum.eigenvalues[1] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(spectrum.eigenvalues[2] == doctest::Approx(4.0).epsilon(1e-10));

    const auto ep = first_eigenpair(g);
    CHECK(ep.lambda == doctest::Approx(1.0).epsilon(1e-10));
    // constant on the interior, zero on the boundary, unit norm
    CHECK(ep.f[0] == doctest::Approx(ep.f[1]).epsilon(1e-10));
    CHECK(ep.f[1] == doctest::Approx(ep.f[2]).epsilon(1e-10));
    CHECK(ep.f[3] == 0.0);
    double norm = 0.0;
    for (double x : ep.f) norm += x * x;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("published eigenvalues") {
    CHECK(std::fabs(first_eigenpair(examples::g1()).lambda - 0.1017) < 5e-5);
    CHECK(std::fabs(first_eigenpair(examples::g2()).lambda - 0.1227) < 5e-5);
    CHECK(std::fabs(first_eigenpair(examples::g3()).lambda - 0.2479) < 5e-5);
    CHECK(std::fabs(first_eigenpair(examples::g4()).lambda - 0.2819) < 5e-5);
}

TEST_CASE("first eigenvalue consistent with the full spectrum") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 25; ++i) {
        const auto g = random_unicyclic(rng, 6, 14);
        const auto ep = first_eigenpair(g);
        const auto spectrum = full_spectrum(g);
        CHECK(std::fabs(spectrum.first() - ep.lambda) < 1e-10);
        CHECK(spectrum.first() > 0.0);
        // residual of the returned pair
        const auto sys = dirichlet_laplacian(g);
        double residual = 0.0;
        for (std::size_t i2 = 0; i2 < sys.interior.size(); ++i2) {
            double r = -ep.lambda * ep.f[sys.interior[i2]];
            for (std::size_t j = 0; j < sys.interior.size(); ++j)
                r += sys.matrix.at(static_cast<int>(i2), static_cast<int>(j)) *
                     ep.f[sys.interior[j]];
            residual += r * r;
        }
        CHECK(std::sqrt(residual) <= 1e-9);
    }
}

TEST_CASE("spectral gap of the first published example is positive") {
    const auto s = full_spectrum(examples::g1());
    CHECK(s.gap() > 1e-9);
}

TEST_CASE("rayleigh quotient") {
    const auto g = examples::g1();
    SUBCASE("indicator of an interior vertex gives its degree") {
        for (int v : g.interior_vertices()) {
            std::vector<double> f(g.vertex_count(), 0.0);
            f[v] = 1.0;
            CHECK(rayleigh_quotient(g, f) == doctest::Approx(g.degrees()[v]).epsilon(1e-12));
        }
    }
    SUBCASE("eigenfunction attains lambda") {
        const auto ep = first_eigenpair(g);
        CHECK(std::fabs(rayleigh_quotient(g, ep.f) - ep.lambda) < 1e-9);
    }
    SUBCASE("error paths") {
        std::vector<double> zero(g.vertex_count(), 0.0);
        CHECK_THROWS_AS((void)rayleigh_quotient(g, zero), std::invalid_argument);
        std::vector<double> on_boundary(g.vertex_count(), 0.0);
        on_boundary[g.boundary_vertices().front()] = 1.0;
        CHECK_THROWS_AS((void)rayleigh_quotient(g, on_boundary), std::invalid_argument);
        std::vector<double> wrong_size(3, 1.0);
        CHECK_THROWS_AS((void)rayleigh_quotient(g, wrong_size), std::invalid_argument);
    }
    SUBCASE("variational bound over random admissible functions") {
        std::mt19937_64 rng(17);
        std::normal_distribution<double> normal;
        const double lambda = first_eigenpair(g).lambda;
        for (int i = 0; i < 1000; ++i) {
            std::vector<double> f(g.vertex_count(), 0.0);
            for (int v : g.interior_vertices()) f[v] = normal(rng);
            CHECK(rayleigh_quotient(g, f) >= 0.1017 - 1e-6);
            CHECK(rayleigh_quotient(g, f) >= lambda - 1e-9);
        }
    }
}

TEST_CASE("eigenvalue counts agree with the Sturm oracle") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
        const auto g = random_unicyclic(rng, 6, 14);
        const auto sys = dirichlet_laplacian(g);
        const auto spectrum = full_spectrum(g);
        const double lo = spectrum.eigenvalues.front() - 0.5;
        const double hi = spectrum.eigenvalues.back() + 0.5;
        for (int t = 0; t < 8; ++t) {
            const double x = lo + (hi - lo) * unit(rng);
            bool near = false;
            int expected = 0;
            for (double ev : spectrum.eigenvalues) {
                near |= std::fabs(ev - x) < 1e-8;
                expected += ev < x;
            }
            if (near) continue;
            CHECK(fk::test::count_eigenvalues_below(sys.matrix, x) == expected);
        }
    }
}

TEST_CASE("solver rejects nonpositive tolerance") {
    CHECK_THROWS_AS(first_eigenpair(triangle_with_pendants(), -1.0), std::invalid_argument);
}

}  // TEST_SUITE
