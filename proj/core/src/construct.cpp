#include "fk/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace fk {
namespace {

struct GreedyResult {
    int vertex_count = 0;
    std::vector<Edge> edges;
    LayerPlan plan;
};

// Layer-major greedy realization of an explicit degree assignment:
// vertex i receives assignment[i]; the root's children form layer 1; with
// a cycle the first two of them are adjacent and each consumes one extra
// degree unit. Throws if the assignment cannot be realized exactly.
GreedyResult layered_greedy(const std::vector<int>& assignment, bool with_cycle) {
    const int n = static_cast<int>(assignment.size());
    GreedyResult out;
    out.vertex_count = n;

    const int root_degree = assignment[0];
    if (with_cycle && root_degree < 2)
        throw std::invalid_argument("root degree below 2 cannot close a cycle");
    if (root_degree < 1 || root_degree >= n)
        throw std::invalid_argument("root degree infeasible");

    out.plan.layer_sizes = {1};
    out.plan.layer_degrees = {{root_degree}};

    int next_id = 1;
    std::vector<int> frontier;
    for (int j = 0; j < root_degree; ++j) {
        out.edges.emplace_back(0, next_id);
        frontier.push_back(next_id++);
    }
    if (with_cycle) out.edges.emplace_back(frontier[0], frontier[1]);

    while (!frontier.empty()) {
        out.plan.layer_sizes.push_back(static_cast<int>(frontier.size()));
        out.plan.layer_degrees.emplace_back();
        std::vector<int> next_frontier;
        for (int v : frontier) {
            if (v >= n) throw std::invalid_argument("degree assignment creates too many vertices");
            const int d = assignment[v];
            out.plan.layer_degrees.back().push_back(d);
            int used = 1;  // parent edge
            if (with_cycle && (v == 1 || v == 2)) ++used;
            if (d < used)
                throw std::invalid_argument("degree assignment infeasible at vertex " +
                                            std::to_string(v));
            for (int c = 0; c < d - used; ++c) {
                if (next_id >= n)
                    throw std::invalid_argument("degree assignment creates too many vertices");
                out.edges.emplace_back(v, next_id);
                next_frontier.push_back(next_id++);
            }
        }
        frontier = std::move(next_frontier);
    }
    if (next_id != n)
        throw std::invalid_argument("degree assignment leaves vertices unplaced");
    return out;
}

std::vector<int> canonical_tree_order(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end(), [](int a, int b) {
        const bool ia = a >= 2, ib = b >= 2;
        if (ia != ib) return ia;
        return a < b;
    });
    return degrees;
}

}  // namespace

LayerPlan u_star_layer_plan(const DegreeSequence& pi) {
    if (pi.interior_degree(2) < 3)
        throw std::invalid_argument(
            "layered construction requires d_2 >= 3; use the pendant-path or "
            "cycle-tree constructor");
    return layered_greedy(pi.degrees(), /*with_cycle=*/true).plan;
}

BoundaryGraph construct_u_star(const DegreeSequence& pi) {
    if (pi.interior_degree(2) < 3)
        throw std::invalid_argument(
            "layered construction requires d_2 >= 3; use the pendant-path or "
            "cycle-tree constructor");
    auto built = layered_greedy(pi.degrees(), /*with_cycle=*/true);
    return build_graph(built.vertex_count, std::move(built.edges));
}

BoundaryGraph construct_slo_tree(const std::vector<int>& tree_degrees) {
    if (!is_tree_degree_sequence(tree_degrees))
        throw std::invalid_argument("not a graphic tree degree sequence");
    auto built = layered_greedy(canonical_tree_order(tree_degrees), /*with_cycle=*/false);
    return BoundaryGraph::tree(built.vertex_count, std::move(built.edges));
}

BoundaryGraph construct_u1(const DegreeSequence& pi) {
    const int m = pi.leading_twos();
    const int k = pi.interior_count();
    if (m < 3 || m >= k || pi.interior_degree(m) != 3)
        throw std::invalid_argument(
            "pendant-path construction requires d_0 = ... = d_{m-1} = 2 and "
            "d_m = 3 with 3 <= m <= k-1");

    // Assignment order: triangle (2, 2, 3), the surplus m-2 twos as a
    // path, then the remaining interior degrees nondecreasing, then 1s.
    std::vector<int> assignment = {2, 2, 3};
    assignment.insert(assignment.end(), m - 2, 2);
    for (int i = m + 1; i < k; ++i) assignment.push_back(pi.interior_degree(i));
    assignment.insert(assignment.end(), pi.boundary_count(), 1);

    auto built = layered_greedy(assignment, /*with_cycle=*/true);
    return build_graph(built.vertex_count, std::move(built.edges));
}

BoundaryGraph construct_u2(const DegreeSequence& pi) {
    const int m = pi.leading_twos();
    const int k = pi.interior_count();
    if (m < 3 || m >= k || pi.interior_degree(m) < 4)
        throw std::invalid_argument(
            "cycle-tree construction requires d_0 = ... = d_{m-1} = 2 and "
            "d_m >= 4 with 3 <= m <= k-1");

    std::vector<int> tree_seq = {pi.interior_degree(m) - 2};
    for (int i = m + 1; i < k; ++i) tree_seq.push_back(pi.interior_degree(i));
    tree_seq.insert(tree_seq.end(), pi.boundary_count(), 1);

    const BoundaryGraph tree = construct_slo_tree(tree_seq);
    const int tn = tree.vertex_count();

    // Cycle of order m+1 through the tree root: root, tn, tn+1, ..., tn+m-1.
    std::vector<Edge> edges = tree.edges();
    edges.emplace_back(0, tn);
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(tn + i, tn + i + 1);
    edges.emplace_back(0, tn + m - 1);
    return build_graph(tn + m, std::move(edges));
}

ConstructionCase classify_construction_case(const DegreeSequence& pi) {
    if (!pi.contains_two()) return ConstructionCase::u_star_all_big;
    const int m = pi.leading_twos();
    if (m <= 2) return ConstructionCase::u_star_two_twos;
    if (m >= pi.interior_count())
        throw std::logic_error("all-interior-2 sequence cannot be valid");
    return pi.interior_degree(m) == 3 ? ConstructionCase::u1_pendant_path
                                      : ConstructionCase::u2_cycle_tree;
}

const char* to_string(ConstructionCase c) {
    switch (c) {
        case ConstructionCase::u_star_all_big: return "ustar";
        case ConstructionCase::u_star_two_twos: return "case1-ustar";
        case ConstructionCase::u1_pendant_path: return "case2-u1";
        case ConstructionCase::u2_cycle_tree: return "case3-u2";
    }
    return "?";
}

BoundaryGraph construct_extremal_candidate(const DegreeSequence& pi) {
    switch (classify_construction_case(pi)) {
        case ConstructionCase::u_star_all_big:
        case ConstructionCase::u_star_two_twos:
            return construct_u_star(pi);
        case ConstructionCase::u1_pendant_path:
            return construct_u1(pi);
        case ConstructionCase::u2_cycle_tree:
            return construct_u2(pi);
    }
    throw std::logic_error("unreachable");
}

}  // namespace fk
