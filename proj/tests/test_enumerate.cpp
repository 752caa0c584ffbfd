#include <set>
#include <vector>

#include "doctest.h"
#include "tdcol/canonical.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/enumerate.hpp"
#include "tdcol/errors.hpp"

#include "corpus.hpp"

using namespace tdcol;

TEST_CASE("class counts for small orders") {
    CHECK(enumerate_transitive(1).size() == 1);
    CHECK(enumerate_transitive(2).size() == 3);
    CHECK(enumerate_transitive(3).size() == 9);
    CHECK(enumerate_transitive(4).size() == 33);
    CHECK(enumerate_transitive(5).size() == 139);
}

TEST_CASE("enumeration matches the filter-everything oracle exactly") {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::uint64_t> oracle;
        for (const Digraph& d : corpus::all_digraphs(n))
            if (is_transitive(d)) oracle.insert(canonical_form(d).bits);

        std::set<std::uint64_t> produced;
        for (const Digraph& d : enumerate_transitive(n)) {
            CHECK(d.n() == n);
            CHECK(is_transitive(d));
            produced.insert(canonical_form(d).bits);
        }
        // same classes, and no class listed twice
        CHECK(produced == oracle);
        CHECK(produced.size() == enumerate_transitive(n).size());
    }
}

TEST_CASE("enumeration is deterministic and cached") {
    const auto& first = enumerate_transitive(3);
    const auto& second = enumerate_transitive(3);
    CHECK(&first == &second);
}

TEST_CASE("order validation") {
    CHECK_THROWS_AS(enumerate_transitive(0), RangeError);
    CHECK_THROWS_AS(enumerate_transitive(-2), RangeError);
    CHECK_THROWS_AS(enumerate_transitive(kMaxEnumerationVertices + 1), TooLargeError);
}
