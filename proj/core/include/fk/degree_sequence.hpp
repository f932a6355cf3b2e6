#ifndef FK_DEGREE_SEQUENCE_HPP
#define FK_DEGREE_SEQUENCE_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fk {

struct SequenceValidation;

/// Degree multiset of a unicyclic graph with boundary, stored canonically:
/// interior entries (>= 2) first in nondecreasing order, then all 1s.
///
/// A multiset is accepted iff it is realizable by a connected unicyclic
/// graph that has at least one pendant vertex:
///   - every entry >= 1,
///   - sum of entries == 2n (n = length),
///   - at least three entries >= 2 (a cycle needs three vertices),
///   - at least one entry == 1.
/// These conditions are also sufficient: a k-cycle on all interior
/// vertices with the surplus realized as pendants always exists.
class DegreeSequence {
public:
    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return static_cast<int>(degrees_.size()); }

    /// Number of entries >= 2 (written k throughout).
    int interior_count() const { return interior_count_; }
    /// Number of trailing 1s.
    int boundary_count() const { return size() - interior_count_; }

    std::span<const int> interior() const {
        return {degrees_.data(), static_cast<std::size_t>(interior_count_)};
    }
    int interior_degree(int i) const { return degrees_[i]; }
    int min_interior_degree() const { return degrees_.front(); }
    bool all_interior_at_least(int d) const { return degrees_.front() >= d; }
    bool contains_two() const { return degrees_.front() == 2; }

    /// Count of leading interior 2s (m in the case split of the
    /// pendant-of-two constructions).
    int leading_twos() const;

    std::string to_string() const;  // comma separated, canonical order

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend std::strong_ordering operator<=>(const DegreeSequence& a,
                                            const DegreeSequence& b) {
        return a.degrees_ <=> b.degrees_;
    }

private:
    explicit DegreeSequence(std::vector<int> canonical);
    std::vector<int> degrees_;
    int interior_count_ = 0;

    friend struct SequenceValidation;
    friend SequenceValidation validate_degree_sequence(std::vector<int> degrees);
};

/// Result of validate_degree_sequence: either the canonical sequence or a
/// human-readable description of the first violated condition.
struct SequenceValidation {
    std::optional<DegreeSequence> sequence;
    std::string violation;  // empty iff valid
    bool ok() const { return sequence.has_value(); }
};

/// Total validation; never throws. See DegreeSequence for the criterion.
SequenceValidation validate_degree_sequence(std::vector<int> degrees);

/// Throwing convenience wrapper around validate_degree_sequence.
DegreeSequence require_degree_sequence(std::vector<int> degrees);

/// Parses "3,3,3,1,1,1". Returns nullopt on malformed input.
std::optional<std::vector<int>> parse_degree_list(std::string_view text);

/// True iff the multiset is the degree sequence of some tree on >= 3
/// vertices: all entries >= 1, sum == 2(n-1), at least one entry >= 2.
bool is_tree_degree_sequence(const std::vector<int>& degrees);

}  // namespace fk

#endif
