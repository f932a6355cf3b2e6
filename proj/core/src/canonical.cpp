#include "fk/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fk {
namespace {

// Dense recoloring: vertices keyed by (old color, sorted neighbor colors),
// new color = rank of the key. Iterates until the partition stops splitting.
void refine(const BoundaryGraph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    using Key = std::pair<int, std::vector<int>>;
    std::vector<Key> keys(n);
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            keys[v].first = color[v];
            keys[v].second.clear();
            for (int w : g.neighbors(v)) keys[v].second.push_back(color[w]);
            std::sort(keys[v].second.begin(), keys[v].second.end());
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return keys[a] < keys[b]; });
        int next = 0;
        std::vector<int> fresh(n);
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
            fresh[order[i]] = next;
        }
        if (next + 1 == classes) {
            color = fresh;
            return;
        }
        classes = next + 1;
        color = fresh;
    }
}

bool discrete(const std::vector<int>& color, int n) {
    std::vector<char> used(n, 0);
    for (int c : color) {
        if (used[c]) return false;
        used[c] = 1;
    }
    return true;
}

std::string render(const BoundaryGraph& g, const std::vector<int>& color) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        const int a = color[u], b = color[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::string code;
    code.reserve(2 + edges.size() * 2);
    code.push_back(static_cast<char>(g.vertex_count()));
    code.push_back(static_cast<char>(edges.size() & 0xff));
    for (const auto& [u, v] : edges) {
        code.push_back(static_cast<char>(u));
        code.push_back(static_cast<char>(v));
    }
    return code;
}

void search(const BoundaryGraph& g, std::vector<int> color, std::string& best) {
    refine(g, color);
    const int n = g.vertex_count();
    if (discrete(color, n)) {
        std::string code = render(g, color);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    // Individualize each vertex of the first non-singleton class.
    int target = -1;
    std::vector<int> count(n, 0);
    for (int c : color) ++count[c];
    for (int c = 0; c < n && target < 0; ++c)
        if (count[c] > 1) target = c;
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        std::vector<int> branched(n);
        for (int u = 0; u < n; ++u)
            branched[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
        search(g, std::move(branched), best);
    }
}

}  // namespace

CanonicalForm canonical_form(const BoundaryGraph& g) {
    const int n = g.vertex_count();
    if (n > 255) throw std::invalid_argument("canonical_form supports at most 255 vertices");
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degrees()[v];
    // densify initial degree colors
    std::vector<int> sorted(color);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), color[v]) - sorted.begin());

    std::string best;
    search(g, std::move(color), best);
    return CanonicalForm{std::move(best)};
}

bool isomorphic(const BoundaryGraph& a, const BoundaryGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace fk
