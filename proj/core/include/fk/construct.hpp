#ifndef FK_CONSTRUCT_HPP
#define FK_CONSTRUCT_HPP

#include <vector>

#include "fk/degree_sequence.hpp"
#include "fk/graph.hpp"

namespace fk {

/// Layer-by-layer plan of the greedy construction: s_t layer sizes and
/// the degree drawn for every vertex, in layer-major creation order.
/// s_1 = d_0 and s_2 = d_1 + ... + d_{s_1} - s_1 - 2 (the two cycle edges
/// inside layer 1 consume two degree units).
struct LayerPlan {
    std::vector<int> layer_sizes;                 // starting at s_0 = 1
    std::vector<std::vector<int>> layer_degrees;  // degree per vertex per layer
};

LayerPlan u_star_layer_plan(const DegreeSequence& pi);

/// The layered greedy unicyclic graph: root of minimum interior degree,
/// its d_0 children in layer 1 with the first two adjacent (closing the
/// triangle), degrees assigned in nondecreasing order breadth-first, each
/// remaining degree realized as children in the next layer. Vertex ids
/// come out in layer-major order. Requires d_2 >= 3; sequences with three
/// or more interior 2s take the other constructors.
BoundaryGraph construct_u_star(const DegreeSequence& pi);

/// The analogous greedy layered tree (no cycle edge): root degree = first
/// entry, degrees assigned nondecreasing in BFS order, boundary = leaves.
BoundaryGraph construct_slo_tree(const std::vector<int>& tree_degrees);

/// Pendant-path variant for sequences 2 = d_0 = ... = d_{m-1}, d_m = 3
/// with m >= 3: triangle (root, v_{1,1}, v_{1,2}) with degrees (2, 2, 3),
/// the m-2 surplus 2s forming a single path below v_{1,2}, then the
/// greedy layered assignment of the remaining degrees. The general rule
/// is a documented extension of the m = 3 case; see README.
BoundaryGraph construct_u1(const DegreeSequence& pi);

/// Cycle-tree variant for 2 = d_0 = ... = d_{m-1}, d_m >= 4 with m >= 3:
/// a cycle of order m+1 sharing one vertex with the root of the greedy
/// tree for (d_m - 2, d_{m+1}, ..., d_{k-1}, 1, ..., 1).
BoundaryGraph construct_u2(const DegreeSequence& pi);

/// Case split used to pick the extremal candidate for a sequence.
enum class ConstructionCase {
    u_star_all_big,   // d_0 >= 3
    u_star_two_twos,  // d_0 = 2, d_2 >= 3
    u1_pendant_path,  // m >= 3 leading 2s, d_m = 3
    u2_cycle_tree,    // m >= 3 leading 2s, d_m >= 4
};

ConstructionCase classify_construction_case(const DegreeSequence& pi);
const char* to_string(ConstructionCase c);

/// Dispatches on classify_construction_case.
BoundaryGraph construct_extremal_candidate(const DegreeSequence& pi);

}  // namespace fk

#endif
