#ifndef FK_REWIRE_HPP
#define FK_REWIRE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fk/graph.hpp"
#include "fk/spectral.hpp"

namespace fk {

/// Two-edge swap G - u1v1 - u2v2 + u1u2 + v1v2. u1, v1, v2 must be
/// interior; u2 may be a boundary vertex. Preserves every vertex degree.
struct SwapMove {
    int u1, v1, u2, v2;
};

/// Multi-edge shift: delete u_t v1 and add u_t v2 for every u_t in
/// shifted. v1, v2 interior, each u_t adjacent to v1 and not to v2,
/// p = |shifted| <= d(v1) - 2. Preserves the degree multiset.
struct ShiftMove {
    int v1, v2;
    std::vector<int> shifted;
};

/// A rewired edge set, annotated with whether it still is a connected
/// unicyclic graph with boundary. Invalid intermediate states stay
/// observable; spectral operations only accept the validated graph.
struct RewireResult {
    int vertex_count = 0;
    std::vector<Edge> edges;
    bool valid = false;
    std::string violation;                // empty iff valid
    std::optional<BoundaryGraph> graph;   // engaged iff valid

    const BoundaryGraph& require() const;
};

/// Both throw std::invalid_argument naming the violated move hypothesis;
/// loss of connectivity is reported through the result instead.
RewireResult apply_swap(const BoundaryGraph& g, const SwapMove& m);
RewireResult apply_shift(const BoundaryGraph& g, const ShiftMove& m);

/// Eigenvalues on both sides of a swap whose function hypotheses
/// f(v1) >= f(u2), f(v2) >= f(u1) hold (tolerance 1e-8). strict_hypothesis
/// records whether one inequality is strict at that tolerance.
struct SwapVerdict {
    double lambda_before = 0.0;
    double lambda_after = 0.0;
    bool strict_hypothesis = false;
};

SwapVerdict check_swap_monotone(const BoundaryGraph& g, const SwapMove& m, const EigenPair& ep);

}  // namespace fk

#endif
