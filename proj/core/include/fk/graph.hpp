#ifndef FK_GRAPH_HPP
#define FK_GRAPH_HPP

#include <utility>
#include <vector>

#include "fk/degree_sequence.hpp"

namespace fk {

/// Undirected edge, normalized to first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Simple connected graph whose vertex set is partitioned into interior
/// vertices (degree >= 2) and boundary vertices (degree exactly 1).
/// Two topologies are supported: unicyclic (|E| = |V|, exactly one cycle,
/// the cycle fully interior) and tree (|E| = |V| - 1, used as the building
/// block of the cycle-plus-tree construction). The boundary is always
/// inferred from the degrees, never declared.
class BoundaryGraph {
public:
    enum class Kind { unicyclic, tree };

    static BoundaryGraph unicyclic(int vertex_count, std::vector<Edge> edges);
    static BoundaryGraph tree(int vertex_count, std::vector<Edge> edges);

    Kind kind() const { return kind_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }        // sorted
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }  // sorted

    bool has_edge(int u, int v) const;
    bool is_boundary(int v) const { return degrees_[v] == 1; }
    bool is_interior(int v) const { return degrees_[v] >= 2; }
    int interior_count() const { return interior_count_; }
    std::vector<int> interior_vertices() const;
    std::vector<int> boundary_vertices() const;

    DegreeSequence degree_sequence() const;

    friend bool operator==(const BoundaryGraph&, const BoundaryGraph&) = default;

private:
    BoundaryGraph() = default;
    static BoundaryGraph checked(Kind kind, int vertex_count, std::vector<Edge> edges);

    Kind kind_ = Kind::unicyclic;
    int n_ = 0;
    int interior_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

/// Builds a unicyclic boundary graph, inferring the boundary as the
/// degree-1 vertices. Throws std::invalid_argument naming the violated
/// invariant (loop or parallel edge, |E| != |V|, disconnected, no
/// boundary vertex, bad vertex id).
BoundaryGraph build_graph(int vertex_count, std::vector<Edge> edges);

/// The unique cycle of a unicyclic graph, in traversal order starting
/// from its smallest vertex id, second vertex the smaller neighbor.
std::vector<int> find_cycle(const BoundaryGraph& g);

/// BFS layering from a root: depths h(v), the layers W_i, and their sizes.
struct Layering {
    int root = 0;
    std::vector<int> depth;                // h(v), indexed by vertex
    std::vector<std::vector<int>> layers;  // layers[i] = W_i, ascending ids

    int height() const { return static_cast<int>(layers.size()) - 1; }
    std::vector<int> layer_sizes() const;
};

Layering bfs_layering(const BoundaryGraph& g, int root);

}  // namespace fk

#endif
