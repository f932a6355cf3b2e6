#include "fk/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fk/canonical.hpp"
#include "fk/ordering.hpp"
#include "fk/rewire.hpp"
#include "fk/spectral.hpp"

namespace fk {
namespace {

constexpr double kMonotoneTol = 1e-9;   // lambda may not rise beyond this
constexpr double kStrictGuard = 1e-12;  // observed strict decrease margin
constexpr double kStrictMargin = 1e-5;  // hypothesis margin that labels a case strict
constexpr double kFunctionTol = 1e-8;

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t round) {
    std::seed_seq seq{seed, index, round};
    return std::mt19937_64(seq);
}

void note(SuiteResult& r, std::mutex& m, const std::string& text) {
    std::scoped_lock lock(m);
    ++r.violations;
    if (r.notes.size() < 8) r.notes.push_back(text);
}

struct SwapCase {
    BoundaryGraph graph;
    EigenPair ep;
    SwapMove move;
    bool strict;
};

// Rejection sampling: fresh graph per round, a bounded number of vertex
// quadruples per graph.
SwapCase draw_swap_case(std::uint64_t seed, int index, int n_min, int n_max) {
    for (std::uint64_t round = 0; round < 1000; ++round) {
        auto rng = case_rng(seed, static_cast<std::uint64_t>(index), round);
        const BoundaryGraph g = random_unicyclic(rng, n_min, n_max);
        const EigenPair ep = first_eigenpair(g);
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        for (int attempt = 0; attempt < 100; ++attempt) {
            SwapMove m{pick(rng), pick(rng), pick(rng), pick(rng)};
            const int ids[4] = {m.u1, m.v1, m.u2, m.v2};
            bool distinct = true;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) distinct &= ids[i] != ids[j];
            if (!distinct) continue;
            if (!g.is_interior(m.u1) || !g.is_interior(m.v1) || !g.is_interior(m.v2)) continue;
            if (!g.has_edge(m.u1, m.v1) || !g.has_edge(m.u2, m.v2)) continue;
            if (g.has_edge(m.u1, m.u2) || g.has_edge(m.v1, m.v2)) continue;
            const double a = ep.f[m.v1] - ep.f[m.u2];
            const double b = ep.f[m.v2] - ep.f[m.u1];
            if (a < -kFunctionTol || b < -kFunctionTol) continue;
            if (!apply_swap(g, m).valid) continue;
            return SwapCase{g, ep, m, a > kStrictMargin || b > kStrictMargin};
        }
    }
    throw std::runtime_error("swap suite failed to sample an admissible case");
}

struct ShiftCase {
    BoundaryGraph graph;
    EigenPair ep;
    ShiftMove move;
    bool strict;
};

ShiftCase draw_shift_case(std::uint64_t seed, int index, int n_min, int n_max) {
    for (std::uint64_t round = 0; round < 1000; ++round) {
        auto rng = case_rng(seed, static_cast<std::uint64_t>(index), round + (1ull << 32));
        const BoundaryGraph g = random_unicyclic(rng, n_min, n_max);
        const EigenPair ep = first_eigenpair(g);
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        for (int attempt = 0; attempt < 100; ++attempt) {
            const int v1 = pick(rng), v2 = pick(rng);
            if (v1 == v2 || !g.is_interior(v1) || !g.is_interior(v2)) continue;
            if (g.degrees()[v1] < 3) continue;
            if (ep.f[v1] < ep.f[v2] - kFunctionTol) continue;
            std::vector<int> eligible;
            for (int u : g.neighbors(v1))
                if (u != v2 && !g.has_edge(u, v2) && ep.f[v2] >= ep.f[u] - kFunctionTol)
                    eligible.push_back(u);
            if (eligible.empty()) continue;
            std::shuffle(eligible.begin(), eligible.end(), rng);
            const int max_p = std::min<int>(g.degrees()[v1] - 2, static_cast<int>(eligible.size()));
            if (max_p < 1) continue;
            const int p = std::uniform_int_distribution<int>(1, max_p)(rng);
            ShiftMove m{v1, v2, {eligible.begin(), eligible.begin() + p}};
            if (!apply_shift(g, m).valid) continue;
            bool strict = false;
            for (int u : m.shifted) strict |= ep.f[v1] - ep.f[u] > kStrictMargin;
            return ShiftCase{g, ep, m, strict};
        }
    }
    throw std::runtime_error("shift suite failed to sample an admissible case");
}

void run_cases(int count, int threads, const std::function<void(int)>& body) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < count; i += threads) body(i);
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

BoundaryGraph random_unicyclic(std::mt19937_64& rng, int n_min, int n_max) {
    const int n = std::uniform_int_distribution<int>(std::max(4, n_min), n_max)(rng);
    const int c = std::uniform_int_distribution<int>(3, n - 1)(rng);
    std::vector<Edge> edges;
    for (int i = 0; i < c; ++i) edges.push_back(make_edge(i, (i + 1) % c));
    for (int v = c; v < n; ++v)
        edges.push_back(make_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v));
    return build_graph(n, std::move(edges));
}

SuiteResult run_swap_monotonicity_suite(const SuiteOptions& opts) {
    SuiteResult result{.name = "swap-monotonicity", .seed = opts.seed};
    std::mutex m;
    std::atomic<int> strict{0};
    run_cases(opts.cases, opts.threads, [&](int i) {
        const auto c = draw_swap_case(opts.seed, i, opts.n_min, opts.n_max);
        const auto verdict = check_swap_monotone(c.graph, c.move, c.ep);
        if (verdict.lambda_after > verdict.lambda_before + kMonotoneTol)
            note(result, m,
                 "case " + std::to_string(i) + ": lambda rose by " +
                     std::to_string(verdict.lambda_after - verdict.lambda_before));
        if (c.strict && !(verdict.lambda_after < verdict.lambda_before - kStrictGuard))
            note(result, m, "case " + std::to_string(i) + ": strict hypothesis without decrease");
        if (c.strict) ++strict;
    });
    result.cases_run = opts.cases;
    result.strict_cases = strict;
    return result;
}

SuiteResult run_shift_monotonicity_suite(const SuiteOptions& opts) {
    SuiteResult result{.name = "shift-monotonicity", .seed = opts.seed};
    std::mutex m;
    std::atomic<int> strict{0};
    run_cases(opts.cases, opts.threads, [&](int i) {
        const auto c = draw_shift_case(opts.seed, i, opts.n_min, opts.n_max);
        const double before = c.ep.lambda;
        const auto& rewired = apply_shift(c.graph, c.move);
        const double after = first_eigenpair(rewired.require()).lambda;
        if (rewired.require().boundary_vertices() != c.graph.boundary_vertices())
            note(result, m, "case " + std::to_string(i) + ": boundary changed");
        if (after > before + kMonotoneTol)
            note(result, m,
                 "case " + std::to_string(i) + ": lambda rose by " + std::to_string(after - before));
        if (c.strict && !(after < before - kStrictGuard))
            note(result, m, "case " + std::to_string(i) + ": strict hypothesis without decrease");
        if (c.strict) ++strict;
    });
    result.cases_run = opts.cases;
    result.strict_cases = strict;
    return result;
}

SuiteResult run_rayleigh_bound_suite(const SuiteOptions& opts) {
    SuiteResult result{.name = "rayleigh-bound", .seed = opts.seed};
    std::mutex m;
    const int graphs = std::max(1, opts.graphs);
    run_cases(graphs, opts.threads, [&](int gi) {
        auto rng = case_rng(opts.seed, static_cast<std::uint64_t>(gi), 2ull << 40);
        const BoundaryGraph g = random_unicyclic(rng, opts.n_min, std::max(opts.n_min + 2, opts.n_max));
        const double lambda = first_eigenpair(g).lambda;
        std::normal_distribution<double> normal;
        for (int i = 0; i < opts.cases; ++i) {
            std::vector<double> f(g.vertex_count(), 0.0);
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.is_interior(v)) f[v] = normal(rng);
            const double r = rayleigh_quotient(g, f);
            if (r < lambda - kMonotoneTol)
                note(result, m,
                     "graph " + std::to_string(gi) + " function " + std::to_string(i) +
                         ": quotient " + std::to_string(r) + " below " + std::to_string(lambda));
        }
    });
    result.cases_run = graphs * opts.cases;
    return result;
}

SuiteResult run_extremal_ordering_sweep(int n_max, const SearchOptions& opts) {
    SuiteResult result{.name = "extremal-ordering-sweep"};
    std::mutex m;
    for (int n = 6; n <= n_max; ++n) {
        for (const auto& pi : all_unicyclic_sequences(n, 3)) {
            const auto report = find_extremal(pi, opts);
            const BoundaryGraph& g = *report.best_graph;
            const EigenPair ep = first_eigenpair(g);
            ++result.cases_run;

            const auto ord = induced_ordering(g, ep);
            const auto slo = check_slo(g, ord);
            if (!slo.ok)
                note(result, m, pi.to_string() + ": induced ordering violates condition " +
                                    std::to_string(slo.violated_condition));
            for (std::size_t i = 0; i + 1 < ord.order.size(); ++i)
                if (ep.f[ord.order[i]] < ep.f[ord.order[i + 1]] - kFunctionTol) {
                    note(result, m, pi.to_string() + ": f increases along the ordering");
                    break;
                }

            const auto cycle = find_cycle(g);
            double min_cycle = 1.0, max_rest = 0.0;
            std::vector<char> on_cycle(g.vertex_count(), 0);
            for (int v : cycle) on_cycle[v] = 1;
            for (int v = 0; v < g.vertex_count(); ++v)
                (on_cycle[v] ? min_cycle = std::min(min_cycle, ep.f[v])
                             : max_rest = std::max(max_rest, ep.f[v]));
            if (!(min_cycle > max_rest))
                note(result, m, pi.to_string() + ": cycle does not dominate the eigenfunction");

            if (cycle.size() != 3) {
                note(result, m, pi.to_string() + ": winner cycle is not a triangle");
            } else {
                std::vector<int> top(g.vertex_count());
                for (int v = 0; v < g.vertex_count(); ++v) top[v] = v;
                std::sort(top.begin(), top.end(),
                          [&](int x, int y) { return ep.f[x] > ep.f[y]; });
                std::vector<int> top3(top.begin(), top.begin() + 3);
                std::sort(top3.begin(), top3.end());
                std::vector<int> cyc = cycle;
                std::sort(cyc.begin(), cyc.end());
                if (top3 != cyc)
                    note(result, m, pi.to_string() + ": top-3 vertices do not induce the cycle");
            }
        }
    }
    return result;
}

SuiteResult run_spectral_invariant_sweep(int n_max, const SearchOptions& opts) {
    SuiteResult result{.name = "spectral-invariant-sweep"};
    std::mutex m;
    for (int n = 6; n <= n_max; ++n) {
        for (const auto& pi : all_unicyclic_sequences(n, 3)) {
            const auto classes = enumerate_unicyclic(pi, opts);
            std::vector<std::string> errors(classes.size());
            run_cases(static_cast<int>(classes.size()), opts.threads, [&](int i) {
                const auto spectrum = full_spectrum(classes[i]);
                if (!(spectrum.first() > 0.0)) {
                    errors[i] = "nonpositive first eigenvalue";
                    return;
                }
                if (!(spectrum.gap() > kMonotoneTol)) {
                    errors[i] = "first eigenvalue not simple";
                    return;
                }
                try {
                    first_eigenpair(classes[i]);  // throws unless f > 0 on interior
                } catch (const std::exception& err) {
                    errors[i] = err.what();
                }
            });
            result.cases_run += static_cast<int>(classes.size());
            for (const auto& e : errors)
                if (!e.empty()) note(result, m, pi.to_string() + ": " + e);
        }
    }
    return result;
}

}  // namespace fk
