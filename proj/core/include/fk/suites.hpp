#ifndef FK_SUITES_HPP
#define FK_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fk/graph.hpp"
#include "fk/search.hpp"

namespace fk {

/// Random connected unicyclic graph with boundary: a cycle of random
/// length plus randomly attached tree vertices. Not uniform over classes;
/// intended for seeded property suites.
BoundaryGraph random_unicyclic(std::mt19937_64& rng, int n_min = 6, int n_max = 12);

struct SuiteOptions {
    int cases = 1000;
    std::uint64_t seed = 7;
    int threads = 1;
    int n_min = 6;
    int n_max = 12;
    int graphs = 20;  // rayleigh suite: number of random graphs
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    int cases_run = 0;
    int strict_cases = 0;  // strictness hypothesis held (margin 1e-5)
    int violations = 0;
    std::vector<std::string> notes;  // first few counterexamples
    bool pass() const { return violations == 0; }
};

/// Two-edge swaps with the function hypotheses satisfied never raise the
/// eigenvalue beyond 1e-9 and strictly lower it (guard 1e-12) whenever one
/// hypothesis inequality is strict by more than 1e-5.
SuiteResult run_swap_monotonicity_suite(const SuiteOptions& opts = {});

/// Same contract for multi-edge shifts with f(v1) >= f(v2) >= f(u_t) and a
/// connected result; strict whenever some f(v1) - f(u_s) > 1e-5.
SuiteResult run_shift_monotonicity_suite(const SuiteOptions& opts = {});

/// Rayleigh quotients of random admissible functions stay above the
/// computed first eigenvalue minus 1e-9. cases = functions per graph.
SuiteResult run_rayleigh_bound_suite(const SuiteOptions& opts = {});

/// For every sequence with interior degrees >= 3 and length <= n_max, the
/// exhaustive winner's induced ordering is spiral-like with nonincreasing
/// f, its cycle carries the largest f values, and the top three induce a
/// triangle.
SuiteResult run_extremal_ordering_sweep(int n_max, const SearchOptions& opts = {});

/// Across every enumerated class of the same sweep: first eigenvalue
/// positive and simple (gap > 1e-9), eigenfunction positive on the
/// interior.
SuiteResult run_spectral_invariant_sweep(int n_max, const SearchOptions& opts = {});

}  // namespace fk

#endif
