#ifndef FK_EXAMPLES_HPP
#define FK_EXAMPLES_HPP

#include <vector>

#include "fk/graph.hpp"

namespace fk::examples {

/// Bundled example graphs with published first Dirichlet eigenvalues,
/// used as golden fixtures. g1/g2 share the degree sequence
/// (2,2,2,3,3,4,5,1^7); g3/g4 share (2,2,2,4,4,5,1^7).
const BoundaryGraph& g1();
const BoundaryGraph& g2();
const BoundaryGraph& g3();
const BoundaryGraph& g4();

/// 13-vertex graph with degree sequence (3,3,3,3,3,4,1^7) whose printed
/// labeling is a spiral-like ordering and a ball approximation.
const BoundaryGraph& slo_ball_example();

/// The layered greedy graph for (3,3,3,4,4,5,1^10): layer sizes
/// (1,3,5,7), cycle on the root and its first two children.
const BoundaryGraph& layered_example();

/// Reference eigenvalues, rounded to 4 decimals as published.
inline constexpr double kLambdaG1 = 0.1017;
inline constexpr double kLambdaG2 = 0.1227;
inline constexpr double kLambdaG3 = 0.2479;
inline constexpr double kLambdaG4 = 0.2819;
inline constexpr double kReferenceTol = 5e-5;  // 4-decimal rounding margin

struct ReferenceCheck {
    const char* name;
    double expected;
    double computed;
    bool pass;
};

/// Recomputes the four reference eigenvalues from the bundled graphs and
/// compares at the given absolute tolerance.
std::vector<ReferenceCheck> reference_checks(double tol = kReferenceTol);

}  // namespace fk::examples

#endif
