#ifndef FK_CANONICAL_HPP
#define FK_CANONICAL_HPP

#include <compare>
#include <string>

#include "fk/graph.hpp"

namespace fk {

/// Isomorphism-class certificate: equal codes iff the graphs are
/// isomorphic. Boundary vertices are exactly the degree-1 vertices, so any
/// isomorphism is automatically boundary-preserving.
struct CanonicalForm {
    std::string code;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labeling by iterative neighborhood-color refinement with
/// backtracking over the refined orbits (individualization). Exponential
/// worst case, fine at the instance sizes this library targets.
CanonicalForm canonical_form(const BoundaryGraph& g);

bool isomorphic(const BoundaryGraph& a, const BoundaryGraph& b);

}  // namespace fk

#endif
