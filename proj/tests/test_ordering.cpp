#include <doctest.h>

#include <numeric>

#include "fk/examples.hpp"
#include "fk/ordering.hpp"
#include "fk/spectral.hpp"

using namespace fk;

namespace {

SloOrdering identity_ordering(const BoundaryGraph& g, int root = 0) {
    SloOrdering ord;
    ord.root = root;
    ord.layering = bfs_layering(g, root);
    ord.order.resize(g.vertex_count());
    std::iota(ord.order.begin(), ord.order.end(), 0);
    return ord;
}

BoundaryGraph triangle_with_pendants() {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_SUITE("ordering") {

TEST_CASE("the printed labeling of the 13-vertex example is spiral-like") {
    const auto& g = examples::slo_ball_example();
    CHECK(check_slo(g, identity_ordering(g)).ok);
}

TEST_CASE("swapping a depth-1 and depth-2 vertex violates condition 1") {
    const auto& g = examples::slo_ball_example();
    auto ord = identity_ordering(g);
    std::swap(ord.order[1], ord.order[4]);
    const auto r = check_slo(g, ord);
    CHECK(!r.ok);
    CHECK(r.violated_condition == 1);
}

TEST_CASE("layer-major labeling of the layered example is spiral-like") {
    const auto& g = examples::layered_example();
    CHECK(check_slo(g, identity_ordering(g)).ok);
}

TEST_CASE("rejects non-permutations and foreign layerings") {
    const auto g = triangle_with_pendants();
    auto ord = identity_ordering(g);
    ord.order[0] = ord.order[1];
    CHECK_THROWS_AS(check_slo(g, ord), std::invalid_argument);
    auto ord2 = identity_ordering(g);
    ord2.order.pop_back();
    CHECK_THROWS_AS(check_slo(g, ord2), std::invalid_argument);
}

TEST_CASE("induced ordering of the fully symmetric graph is layer-major") {
    const auto g = triangle_with_pendants();
    const auto ord = induced_ordering(g, first_eigenpair(g));
    // root on the cycle, boundary suffix, depths nondecreasing
    CHECK(g.is_interior(ord.root));
    const auto& h = ord.layering.depth;
    for (std::size_t i = 0; i + 1 < ord.order.size(); ++i)
        CHECK(h[ord.order[i]] <= h[ord.order[i + 1]]);
    for (int i = 3; i < 6; ++i) CHECK(g.is_boundary(ord.order[i]));
}

TEST_CASE("induced ordering of the layered example is monotone spiral-like") {
    const auto& g = examples::layered_example();
    const auto ep = first_eigenpair(g);
    const auto ord = induced_ordering(g, ep);
    CHECK(check_slo(g, ord).ok);
    for (std::size_t i = 0; i + 1 < ord.order.size(); ++i)
        CHECK(ep.f[ord.order[i]] >= ep.f[ord.order[i + 1]] - 1e-8);
    CHECK(check_degree_monotone(g, ord));
}

TEST_CASE("induced ordering is total on non-extremal graphs") {
    const auto& g = examples::g2();
    const auto ord = induced_ordering(g, first_eigenpair(g));
    CHECK(ord.order.size() == 14);
    CHECK(ord.order.front() == ord.root);
    bool boundary_suffix = true, seen = false;
    for (int v : ord.order) {
        if (g.is_boundary(v)) seen = true;
        else boundary_suffix &= !seen;
    }
    CHECK(boundary_suffix);
}

TEST_CASE("eigenfunction size must match the graph") {
    const auto g = triangle_with_pendants();
    EigenPair ep = first_eigenpair(g);
    ep.f.pop_back();
    CHECK_THROWS_AS(induced_ordering(g, ep), std::invalid_argument);
}

TEST_CASE("ball approximation") {
    CHECK(is_ball_approximation(examples::slo_ball_example(), 0));
    CHECK(!is_ball_approximation(examples::g1(), 0));
    CHECK(is_ball_approximation(triangle_with_pendants(), 0));
    CHECK_THROWS_AS(is_ball_approximation(triangle_with_pendants(), 42),
                    std::invalid_argument);
}

TEST_CASE("degree monotonicity along the induced ordering") {
    SUBCASE("holds on the layered example") {
        const auto& g = examples::layered_example();
        CHECK(check_degree_monotone(g, induced_ordering(g, first_eigenpair(g))));
    }
    SUBCASE("fails on the first published example") {
        const auto& g = examples::g1();
        CHECK(!check_degree_monotone(g, induced_ordering(g, first_eigenpair(g))));
    }
    SUBCASE("holds when all interior degrees coincide") {
        const auto g = triangle_with_pendants();
        CHECK(check_degree_monotone(g, induced_ordering(g, first_eigenpair(g))));
    }
}

}  // TEST_SUITE
