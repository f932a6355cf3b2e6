#include <doctest.h>

#include "fk/degree_sequence.hpp"
#include "fk/search.hpp"
#include "support/naive_oracle.hpp"

using namespace fk;

TEST_SUITE("degree_sequence") {

TEST_CASE("accepts the triangle-with-pendants multiset") {
    auto v = validate_degree_sequence({3, 1, 3, 1, 3, 1});
    REQUIRE(v.ok());
    CHECK(v.sequence->degrees() == std::vector<int>{3, 3, 3, 1, 1, 1});
    CHECK(v.sequence->interior_count() == 3);
    CHECK(v.sequence->boundary_count() == 3);
}

TEST_CASE("rejects sum-consistent multiset without enough interior degrees") {
    auto v = validate_degree_sequence({3, 3, 1, 1});
    REQUIRE(!v.ok());
    CHECK(v.violation.find("fewer than three") != std::string::npos);
}

TEST_CASE("accepts the 14-vertex example sequence") {
    auto v = validate_degree_sequence({2, 2, 2, 3, 3, 4, 5, 1, 1, 1, 1, 1, 1, 1});
    REQUIRE(v.ok());
    CHECK(v.sequence->size() == 14);
    CHECK(v.sequence->interior_count() == 7);
    CHECK(v.sequence->leading_twos() == 3);
    CHECK(v.sequence->to_string() == "2,2,2,3,3,4,5,1,1,1,1,1,1,1");
}

TEST_CASE("names the violated condition") {
    CHECK(validate_degree_sequence({}).violation == "empty sequence");
    CHECK(validate_degree_sequence({3, 0, 1}).violation == "nonpositive entry");
    CHECK(validate_degree_sequence({3, 3, 3, 1, 1}).violation.find("degree sum") !=
          std::string::npos);
    // pure cycle: no boundary vertex
    CHECK(validate_degree_sequence({2, 2, 2}).violation.find("no degree-1") !=
          std::string::npos);
    CHECK_THROWS_AS(require_degree_sequence({2, 2, 2}), std::invalid_argument);
}

TEST_CASE("parse_degree_list") {
    CHECK(parse_degree_list("3,3,3,1,1,1") == std::vector<int>{3, 3, 3, 1, 1, 1});
    CHECK(!parse_degree_list("3,,1"));
    CHECK(!parse_degree_list("3,1,"));
    CHECK(!parse_degree_list("a,b"));
    CHECK(!parse_degree_list(""));
}

TEST_CASE("tree degree sequences") {
    CHECK(is_tree_degree_sequence({2, 1, 1}));
    CHECK(is_tree_degree_sequence({2, 4, 5, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(!is_tree_degree_sequence({1, 1}));        // below minimum order
    CHECK(!is_tree_degree_sequence({2, 2, 1, 1, 1}));  // sum mismatch
    CHECK(!is_tree_degree_sequence({3, 0, 1, 1, 1}));
}

// The arithmetic acceptance rule must agree with an exhaustive
// realization search for every multiset of length <= 9.
TEST_CASE("validator agrees with the existence oracle") {
    for (int n = 3; n <= 9; ++n) {
        // all multisets of n entries >= 1 summing to 2n, nondecreasing
        std::vector<int> entries;
        auto rec = [&](auto&& self, int remaining, int slots, int min_value) -> void {
            if (slots == 0) {
                if (remaining != 0) return;
                std::vector<int> interior;
                int leaves = 0;
                for (int d : entries) (d >= 2 ? interior.push_back(d) : (void)++leaves);
                bool exists = false;
                fk::detail::generate_unicyclic_raw(
                    interior, leaves, [&](int, const std::vector<Edge>&) {
                        exists = true;
                        return false;  // stop at the first realization
                    });
                CAPTURE(fk::test::degree_key(entries));
                CHECK(validate_degree_sequence(entries).ok() == exists);
                return;
            }
            for (int d = min_value; d * slots <= remaining; ++d) {
                entries.push_back(d);
                self(self, remaining - d, slots - 1, d);
                entries.pop_back();
            }
        };
        rec(rec, 2 * n, n, 1);
    }
}

}  // TEST_SUITE
