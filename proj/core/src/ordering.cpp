#include "fk/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fk {
namespace {

constexpr double kFunctionGrid = 1e8;  // f comparisons on a 1e-8 grid

long long quantized(double x) { return std::llround(x * kFunctionGrid); }

std::vector<int> ranks_of(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("ordering is not a permutation: wrong length");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        if (v < 0 || v >= n || rank[v] >= 0)
            throw std::invalid_argument("ordering is not a permutation");
        rank[v] = i;
    }
    return rank;
}

}  // namespace

std::vector<int> SloOrdering::ranks() const {
    return ranks_of(order, static_cast<int>(order.size()));
}

SloCheckResult check_slo(const BoundaryGraph& g, const SloOrdering& ord) {
    const int n = g.vertex_count();
    const auto rank = ranks_of(ord.order, n);
    if (ord.order.front() != ord.root)
        throw std::invalid_argument("ordering does not start at its root");
    const auto& h = ord.layering.depth;
    if (static_cast<int>(h.size()) != n || ord.layering.root != ord.root)
        throw std::invalid_argument("ordering carries a foreign layering");

    // (1) rank respects depth
    for (int i = 0; i + 1 < n; ++i)
        if (h[ord.order[i]] > h[ord.order[i + 1]])
            return {false, 1, {ord.order[i], ord.order[i + 1]}};

    // (2) parent-order consistency, exhaustive scan over parent-child pairs
    std::vector<std::pair<int, int>> pc;  // (parent, child) with h(parent) = h(child) - 1
    for (const auto& [a, b] : g.edges()) {
        if (h[a] == h[b] - 1) pc.emplace_back(a, b);
        if (h[b] == h[a] - 1) pc.emplace_back(b, a);
    }
    for (const auto& [u, v] : pc) {
        for (const auto& [x, y] : pc) {
            if (g.has_edge(u, y) || g.has_edge(x, v)) continue;
            if (rank[u] < rank[x] && !(rank[v] < rank[y]))
                return {false, 2, {u, v, x, y}};
        }
    }

    // (3) boundary suffix
    bool seen_boundary = false;
    for (int v : ord.order) {
        if (g.is_boundary(v))
            seen_boundary = true;
        else if (seen_boundary)
            return {false, 3, {v}};
    }
    return {};
}

SloOrdering induced_ordering(const BoundaryGraph& g, const EigenPair& ep) {
    const int n = g.vertex_count();
    if (static_cast<int>(ep.f.size()) != n)
        throw std::invalid_argument("eigenfunction does not match graph");

    int root = 0;
    for (int v = 1; v < n; ++v)
        if (quantized(ep.f[v]) > quantized(ep.f[root])) root = v;

    SloOrdering ord;
    ord.root = root;
    ord.layering = bfs_layering(g, root);
    ord.order.reserve(n);
    ord.order.push_back(root);

    std::vector<int> rank(n, -1);
    rank[root] = 0;
    const auto& h = ord.layering.depth;
    for (int t = 0; t + 1 <= ord.layering.height(); ++t) {
        std::vector<int> next = ord.layering.layers[t + 1];
        std::vector<int> parent_rank(n, 0);
        for (int w : next) {
            int best = n;
            for (int p : g.neighbors(w))
                if (h[p] == t && rank[p] < best) best = rank[p];
            parent_rank[w] = best;
        }
        std::sort(next.begin(), next.end(), [&](int a, int b) {
            if (parent_rank[a] != parent_rank[b]) return parent_rank[a] < parent_rank[b];
            const auto fa = quantized(ep.f[a]), fb = quantized(ep.f[b]);
            if (fa != fb) return fa > fb;
            return a < b;
        });
        for (int w : next) {
            rank[w] = static_cast<int>(ord.order.size());
            ord.order.push_back(w);
        }
    }
    return ord;
}

bool is_ball_approximation(const BoundaryGraph& g, int root) {
    const auto lay = bfs_layering(g, root);
    int lo = g.vertex_count(), hi = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_boundary(v)) continue;
        lo = std::min(lo, lay.depth[v]);
        hi = std::max(hi, lay.depth[v]);
    }
    if (hi - lo >= 2) return false;

    const auto sizes = lay.layer_sizes();
    const auto monotone_up_to = [&](int r) {
        for (int i = 1; i + 1 <= r && i + 1 < static_cast<int>(sizes.size()); ++i)
            if (sizes[i + 1] < sizes[i]) return false;
        return true;
    };
    for (int r : {hi - 1, hi}) {
        if (r < 1) continue;
        if (lo >= r && hi <= r + 1 && monotone_up_to(r)) return true;
    }
    return false;
}

bool check_degree_monotone(const BoundaryGraph& g, const SloOrdering& ord) {
    ranks_of(ord.order, g.vertex_count());  // permutation check
    int prev = 0;
    bool seen_boundary = false;
    for (int v : ord.order) {
        if (g.is_boundary(v)) {
            seen_boundary = true;
            continue;
        }
        if (seen_boundary) return false;  // interior after a boundary vertex
        if (g.degrees()[v] < prev) return false;
        prev = g.degrees()[v];
    }
    return true;
}

}  // namespace fk
