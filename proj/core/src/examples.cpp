#include "fk/examples.hpp"

#include "fk/spectral.hpp"

namespace fk::examples {

const BoundaryGraph& g1() {
    static const BoundaryGraph g = build_graph(
        14, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {5, 8}, {5, 9},
             {6, 10}, {6, 11}, {6, 12}, {6, 13}});
    return g;
}

const BoundaryGraph& g2() {
    static const BoundaryGraph g = build_graph(
        14, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {5, 8}, {5, 9},
             {6, 10}, {6, 11}, {6, 12}, {6, 13}});
    return g;
}

const BoundaryGraph& g3() {
    static const BoundaryGraph g = build_graph(
        13, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 9},
             {5, 10}, {5, 11}, {5, 12}});
    return g;
}

const BoundaryGraph& g4() {
    static const BoundaryGraph g = build_graph(
        13, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 9},
             {5, 10}, {5, 11}, {5, 12}});
    return g;
}

const BoundaryGraph& slo_ball_example() {
    static const BoundaryGraph g = build_graph(
        13, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9},
             {4, 10}, {5, 11}, {5, 12}});
    return g;
}

const BoundaryGraph& layered_example() {
    static const BoundaryGraph g = build_graph(
        16, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 9},
             {4, 10}, {4, 11}, {5, 12}, {5, 13}, {5, 14}, {5, 15}});
    return g;
}

std::vector<ReferenceCheck> reference_checks(double tol) {
    const struct {
        const char* name;
        const BoundaryGraph& graph;
        double expected;
    } cases[] = {
        {"lambda(G1)", g1(), kLambdaG1},
        {"lambda(G2)", g2(), kLambdaG2},
        {"lambda(G3)", g3(), kLambdaG3},
        {"lambda(G4)", g4(), kLambdaG4},
    };
    std::vector<ReferenceCheck> out;
    for (const auto& c : cases) {
        const double lambda = first_eigenpair(c.graph).lambda;
        out.push_back({c.name, c.expected, lambda, std::abs(lambda - c.expected) <= tol});
    }
    return out;
}

}  // namespace fk::examples
