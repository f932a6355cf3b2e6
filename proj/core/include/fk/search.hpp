#ifndef FK_SEARCH_HPP
#define FK_SEARCH_HPP

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "fk/canonical.hpp"
#include "fk/construct.hpp"
#include "fk/degree_sequence.hpp"
#include "fk/graph.hpp"

namespace fk {

struct SearchOptions {
    int cap = 13;      // largest vertex count enumerated
    int threads = 1;   // worker threads for spectral evaluation
    std::optional<std::filesystem::path> cache_dir;  // memoized enumeration
};

/// Distinct eigenvalues closer than this count as a tie; theorem sweeps
/// require a strictly larger runner-up at the same margin.
inline constexpr double kLambdaGap = 1e-9;

/// All canonical degree sequences of length n realizable by a connected
/// unicyclic graph with boundary, every interior entry >= min_interior.
std::vector<DegreeSequence> all_unicyclic_sequences(int n, int min_interior = 2);

/// Streams one representative per isomorphism class of the connected
/// unicyclic realizations of pi, deduplicated by canonical form, in a
/// deterministic order. Enumeration picks the cycle length and cycle
/// degree necklace, then attaches rooted forests by backtracking.
void for_each_unicyclic(const DegreeSequence& pi,
                        const std::function<void(const BoundaryGraph&)>& emit,
                        const SearchOptions& opts = {});

/// Collected classes, sorted by canonical code.
std::vector<BoundaryGraph> enumerate_unicyclic(const DegreeSequence& pi,
                                               const SearchOptions& opts = {});

/// Exhaustive minimum of the first Dirichlet eigenvalue over the classes.
struct SearchReport {
    DegreeSequence pi;
    int count_isoclasses = 0;
    double best_lambda = 0.0;
    std::optional<BoundaryGraph> best_graph;
    double runner_up_lambda = 0.0;  // +inf when a single class exists
    bool matches_construction = false;
    bool unique_minimum = true;     // gap to runner-up > kLambdaGap
    ConstructionCase construction_case;
    double construction_lambda = 0.0;
    std::chrono::duration<double> elapsed{};
};

SearchReport find_extremal(const DegreeSequence& pi, const SearchOptions& opts = {});

/// Per-sequence verdict rows shared by the sweep drivers.
struct VerdictRow {
    DegreeSequence pi;
    std::string label;        // construction case name, or "reference"
    bool searched = true;     // false for the bundled reference rows
    int classes = 0;
    double best_lambda = 0.0;
    double construction_lambda = 0.0;
    std::optional<bool> agree;  // winner isomorphic to the construction
    double gap = 0.0;           // searched: runner-up margin; reference: alternative - construction
};

/// Exhaustive verification over every sequence with all interior degrees
/// >= 3 and length <= n_max: the minimum must be attained uniquely by the
/// layered construction. Stops at the first failing sequence and carries
/// the counterexample.
struct TheoremSummary {
    int n_max = 0;
    bool all_pass = true;
    std::vector<VerdictRow> rows;
    std::optional<std::pair<DegreeSequence, BoundaryGraph>> counterexample;
};

TheoremSummary verify_theorem_1_2(int n_max, const SearchOptions& opts = {});

/// Report-only sweep over every sequence containing a 2 with length
/// <= n_max, classified by construction case and compared against the
/// case's candidate. Appends the two bundled reference rows comparing the
/// candidate construction with the bundled alternative realization.
struct ConjectureSummary {
    int n_max = 0;
    std::vector<VerdictRow> rows;
};

ConjectureSummary explore_conjecture_5_3(int n_max, const SearchOptions& opts = {});

std::string rows_to_csv(const std::vector<VerdictRow>& rows);
std::string summary_to_json(const TheoremSummary& s);
std::string summary_to_json(const ConjectureSummary& s);

namespace detail {

/// Raw generator behind for_each_unicyclic: emits every connected
/// unicyclic realization of (interior multiset, leaf count) at least once
/// per isomorphism class, possibly with repeats. Infeasible multisets
/// yield nothing. Callback returns false to stop early.
void generate_unicyclic_raw(const std::vector<int>& interior_degrees, int leaves,
                            const std::function<bool(int, const std::vector<Edge>&)>& emit);

}  // namespace detail

}  // namespace fk

#endif
