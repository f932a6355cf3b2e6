#include "fk/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace fk {

Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

BoundaryGraph BoundaryGraph::checked(Kind kind, int n, std::vector<Edge> edges) {
    if (n < 3) throw std::invalid_argument("graph needs at least 3 vertices");

    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge");
    for (const auto& [u, v] : edges)
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");

    const auto expected = kind == Kind::unicyclic ? static_cast<std::size_t>(n)
                                                  : static_cast<std::size_t>(n) - 1;
    if (edges.size() != expected)
        throw std::invalid_argument(
            kind == Kind::unicyclic
                ? "unicyclic graph requires |E| == |V|, got " + std::to_string(edges.size())
                : "tree requires |E| == |V| - 1, got " + std::to_string(edges.size()));

    BoundaryGraph g;
    g.kind_ = kind;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.degrees_.assign(n, 0);
    g.adj_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
        ++g.degrees_[u];
        ++g.degrees_[v];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    // Connectivity; with the edge count fixed this also settles the cycle
    // structure (exactly one for unicyclic, none for a tree).
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw std::invalid_argument("graph is disconnected");

    g.interior_count_ = static_cast<int>(
        std::count_if(g.degrees_.begin(), g.degrees_.end(), [](int d) { return d >= 2; }));
    if (g.interior_count_ == n)
        throw std::invalid_argument("no degree-1 vertex, boundary would be empty");
    return g;
}

BoundaryGraph BoundaryGraph::unicyclic(int vertex_count, std::vector<Edge> edges) {
    return checked(Kind::unicyclic, vertex_count, std::move(edges));
}

BoundaryGraph BoundaryGraph::tree(int vertex_count, std::vector<Edge> edges) {
    return checked(Kind::tree, vertex_count, std::move(edges));
}

bool BoundaryGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> BoundaryGraph::interior_vertices() const {
    std::vector<int> out;
    out.reserve(interior_count_);
    for (int v = 0; v < n_; ++v)
        if (degrees_[v] >= 2) out.push_back(v);
    return out;
}

std::vector<int> BoundaryGraph::boundary_vertices() const {
    std::vector<int> out;
    out.reserve(n_ - interior_count_);
    for (int v = 0; v < n_; ++v)
        if (degrees_[v] == 1) out.push_back(v);
    return out;
}

DegreeSequence BoundaryGraph::degree_sequence() const {
    return require_degree_sequence(degrees_);
}

BoundaryGraph build_graph(int vertex_count, std::vector<Edge> edges) {
    return BoundaryGraph::unicyclic(vertex_count, std::move(edges));
}

std::vector<int> find_cycle(const BoundaryGraph& g) {
    if (g.kind() != BoundaryGraph::Kind::unicyclic)
        throw std::invalid_argument("find_cycle requires a unicyclic graph");

    // Peel leaves until only the cycle remains.
    const int n = g.vertex_count();
    std::vector<int> deg = g.degrees();
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) q.push(v);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        deg[u] = 0;
        for (int w : g.neighbors(u))
            if (deg[w] > 0 && --deg[w] == 1) q.push(w);
    }

    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (deg[v] > 0) start = v;

    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (deg[w] > 0 && w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
        if (cur != start) cycle.push_back(cur);
    } while (cur != start);
    return cycle;
}

Layering bfs_layering(const BoundaryGraph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("bfs root " + std::to_string(root) + " out of range");

    Layering out;
    out.root = root;
    out.depth.assign(g.vertex_count(), -1);
    out.depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        const int d = out.depth[u];
        if (static_cast<int>(out.layers.size()) <= d) out.layers.resize(d + 1);
        out.layers[d].push_back(u);
        for (int w : g.neighbors(u))
            if (out.depth[w] < 0) {
                out.depth[w] = d + 1;
                q.push(w);
            }
    }
    for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
    return out;
}

std::vector<int> Layering::layer_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(layers.size());
    for (const auto& layer : layers) sizes.push_back(static_cast<int>(layer.size()));
    return sizes;
}

}  // namespace fk
