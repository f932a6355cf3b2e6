#include "fk/rewire.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fk {
namespace {

constexpr double kFunctionTol = 1e-8;

RewireResult finish(int n, std::vector<Edge> edges) {
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    RewireResult out;
    out.vertex_count = n;
    out.edges = edges;
    try {
        out.graph = build_graph(n, std::move(edges));
        out.valid = true;
    } catch (const std::invalid_argument& err) {
        out.valid = false;
        out.violation = err.what();
    }
    return out;
}

std::vector<Edge> without(const BoundaryGraph& g, std::initializer_list<Edge> removed) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
    return edges;
}

}  // namespace

const BoundaryGraph& RewireResult::require() const {
    if (!graph) throw std::logic_error("rewired graph is not unicyclic: " + violation);
    return *graph;
}

RewireResult apply_swap(const BoundaryGraph& g, const SwapMove& m) {
    const int ids[4] = {m.u1, m.v1, m.u2, m.v2};
    for (int v : ids)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("swap vertex out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ids[i] == ids[j]) throw std::invalid_argument("swap vertices must be distinct");
    if (!g.is_interior(m.u1)) throw std::invalid_argument("u1 must be interior");
    if (!g.is_interior(m.v1)) throw std::invalid_argument("v1 must be interior");
    if (!g.is_interior(m.v2)) throw std::invalid_argument("v2 must be interior");
    if (!g.has_edge(m.u1, m.v1)) throw std::invalid_argument("u1v1 is not an edge");
    if (!g.has_edge(m.u2, m.v2)) throw std::invalid_argument("u2v2 is not an edge");
    if (g.has_edge(m.u1, m.u2)) throw std::invalid_argument("u1u2 is already an edge");
    if (g.has_edge(m.v1, m.v2)) throw std::invalid_argument("v1v2 is already an edge");

    auto edges = without(g, {make_edge(m.u1, m.v1), make_edge(m.u2, m.v2)});
    edges.push_back(make_edge(m.u1, m.u2));
    edges.push_back(make_edge(m.v1, m.v2));
    return finish(g.vertex_count(), std::move(edges));
}

RewireResult apply_shift(const BoundaryGraph& g, const ShiftMove& m) {
    if (m.v1 < 0 || m.v1 >= g.vertex_count() || m.v2 < 0 || m.v2 >= g.vertex_count())
        throw std::invalid_argument("shift vertex out of range");
    if (m.v1 == m.v2) throw std::invalid_argument("v1 and v2 must be distinct");
    if (!g.is_interior(m.v1)) throw std::invalid_argument("v1 must be interior");
    if (!g.is_interior(m.v2)) throw std::invalid_argument("v2 must be interior");
    if (m.shifted.empty()) throw std::invalid_argument("no vertices to shift");
    const int p = static_cast<int>(m.shifted.size());
    if (p > g.degrees()[m.v1] - 2)
        throw std::invalid_argument("p exceeds d(v1) - 2");

    std::vector<int> shifted = m.shifted;
    std::sort(shifted.begin(), shifted.end());
    if (std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end())
        throw std::invalid_argument("shifted vertices must be distinct");
    std::vector<Edge> edges = g.edges();
    for (int u : shifted) {
        if (u == m.v1 || u == m.v2)
            throw std::invalid_argument("shifted vertex coincides with v1 or v2");
        if (!g.has_edge(u, m.v1)) throw std::invalid_argument("shifted vertex not adjacent to v1");
        if (g.has_edge(u, m.v2)) throw std::invalid_argument("shifted vertex already adjacent to v2");
        edges.erase(std::find(edges.begin(), edges.end(), make_edge(u, m.v1)));
        edges.push_back(make_edge(u, m.v2));
    }
    return finish(g.vertex_count(), std::move(edges));
}

SwapVerdict check_swap_monotone(const BoundaryGraph& g, const SwapMove& m, const EigenPair& ep) {
    if (static_cast<int>(ep.f.size()) != g.vertex_count())
        throw std::invalid_argument("eigenpair does not match graph");
    if (std::fabs(rayleigh_quotient(g, ep.f) - ep.lambda) > 1e-7)
        throw std::invalid_argument("eigenpair does not match graph");

    const double a = ep.f[m.v1] - ep.f[m.u2];
    const double b = ep.f[m.v2] - ep.f[m.u1];
    if (a < -kFunctionTol || b < -kFunctionTol)
        throw std::invalid_argument("function hypotheses f(v1) >= f(u2), f(v2) >= f(u1) violated");

    const auto rewired = apply_swap(g, m);
    if (!rewired.valid)
        throw std::invalid_argument("swap leaves the unicyclic class: " + rewired.violation);

    SwapVerdict verdict;
    verdict.lambda_before = ep.lambda;
    verdict.lambda_after = first_eigenpair(rewired.require()).lambda;
    verdict.strict_hypothesis = a > kFunctionTol || b > kFunctionTol;
    return verdict;
}

}  // namespace fk
