#include "fk/degree_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fk {

DegreeSequence::DegreeSequence(std::vector<int> canonical)
    : degrees_(std::move(canonical)) {
    interior_count_ = static_cast<int>(
        std::count_if(degrees_.begin(), degrees_.end(), [](int d) { return d >= 2; }));
}

int DegreeSequence::leading_twos() const {
    int m = 0;
    while (m < interior_count_ && degrees_[m] == 2) ++m;
    return m;
}

std::string DegreeSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(degrees_[i]);
    }
    return out;
}

SequenceValidation validate_degree_sequence(std::vector<int> degrees) {
    if (degrees.empty()) return {std::nullopt, "empty sequence"};
    if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; }))
        return {std::nullopt, "nonpositive entry"};

    const auto n = static_cast<long long>(degrees.size());
    const long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (sum != 2 * n)
        return {std::nullopt,
                "degree sum " + std::to_string(sum) + " != 2n = " + std::to_string(2 * n)};

    const auto k = std::count_if(degrees.begin(), degrees.end(), [](int d) { return d >= 2; });
    if (k < 3) return {std::nullopt, "fewer than three entries >= 2, no cycle realizable"};
    if (k == n) return {std::nullopt, "no degree-1 entry, boundary would be empty"};

    // Canonical order: interior nondecreasing, then the 1s.
    std::sort(degrees.begin(), degrees.end(), [](int a, int b) {
        const bool ia = a >= 2, ib = b >= 2;
        if (ia != ib) return ia;
        return a < b;
    });
    return {DegreeSequence(std::move(degrees)), ""};
}

DegreeSequence require_degree_sequence(std::vector<int> degrees) {
    auto v = validate_degree_sequence(std::move(degrees));
    if (!v.ok()) throw std::invalid_argument("invalid degree sequence: " + v.violation);
    return *std::move(v.sequence);
}

std::optional<std::vector<int>> parse_degree_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) return std::nullopt;
        out.push_back(value);
        pos = end + 1;
    }
    if (out.empty()) return std::nullopt;
    if (!text.empty() && text.back() == ',') return std::nullopt;
    return out;
}

bool is_tree_degree_sequence(const std::vector<int>& degrees) {
    const auto n = static_cast<long long>(degrees.size());
    if (n < 3) return false;
    if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; })) return false;
    const long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    return sum == 2 * (n - 1);
}

}  // namespace fk
