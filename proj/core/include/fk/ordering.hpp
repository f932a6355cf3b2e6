#ifndef FK_ORDERING_HPP
#define FK_ORDERING_HPP

#include <vector>

#include "fk/graph.hpp"
#include "fk/spectral.hpp"

namespace fk {

/// A vertex well-ordering together with its root and BFS layering.
/// order[i] is the vertex of rank i; order[0] is the root.
struct SloOrdering {
    std::vector<int> order;
    int root = 0;
    Layering layering;

    std::vector<int> ranks() const;  // ranks()[v] = position of v in order
};

/// Outcome of the spiral-like ordering check. violated_condition is 1, 2
/// or 3 (the failing clause) and witness lists the offending vertices.
struct SloCheckResult {
    bool ok = true;
    int violated_condition = 0;
    std::vector<int> witness;
    explicit operator bool() const { return ok; }
};

/// Checks the three spiral-like conditions:
///  (1) rank respects BFS depth,
///  (2) for parent-child pairs (u,v), (x,y) with uy and xv non-edges,
///      u before x forces v before y,
///  (3) boundary vertices form a suffix of the order.
SloCheckResult check_slo(const BoundaryGraph& g, const SloOrdering& ord);

/// The relabeling induced by a first eigenfunction: root = argmax f,
/// layers ordered so children of earlier parents come first and siblings
/// are sorted by nonincreasing f. f values are compared on a 1e-8 grid;
/// remaining ties break toward the smaller original vertex id.
SloOrdering induced_ordering(const BoundaryGraph& g, const EigenPair& ep);

/// True iff some radius r >= 1 has nondecreasing layer sizes n_2 >= n_1,
/// ..., n_r >= n_{r-1} and every boundary vertex at depth r or r+1.
bool is_ball_approximation(const BoundaryGraph& g, int root);

/// True iff interior degrees are nondecreasing along the order and the
/// boundary vertices form the suffix.
bool check_degree_monotone(const BoundaryGraph& g, const SloOrdering& ord);

}  // namespace fk

#endif
