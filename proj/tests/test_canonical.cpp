#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "tdcol/canonical.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/enumerate.hpp"
#include "tdcol/errors.hpp"

#include "corpus.hpp"

using namespace tdcol;

namespace {

// Independent oracle: try every vertex permutation.
bool isomorphic_by_permutations(const Digraph& a, const Digraph& b) {
    if (a.n() != b.n() || a.arc_count() != b.arc_count()) return false;
    std::vector<int> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n() && ok; ++u)
            for (int v = 0; v < a.n() && ok; ++v)
                if (u != v && a.has_arc(u, v) != b.has_arc(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical forms agree with the permutation oracle on all transitive pairs, n = 4") {
    const auto& graphs = enumerate_transitive(4);
    REQUIRE(graphs.size() == 33);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            const bool keys = canonical_form(graphs[i]) == canonical_form(graphs[j]);
            const bool perms = isomorphic_by_permutations(graphs[i], graphs[j]);
            CHECK(keys == perms);
        }
}

TEST_CASE("canonical form is invariant under relabelling") {
    const Digraph d(4, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {3, 2}});
    const CanonicalForm base = canonical_form(d);
    std::vector<int> perm{2, 0, 3, 1};
    Digraph relabelled(4);
    for (auto [u, v] : d.arcs()) relabelled.add_arc(perm[u], perm[v]);
    CHECK(canonical_form(relabelled) == base);
    CHECK(isomorphic(d, relabelled));
}

TEST_CASE("canonical form distinguishes non-isomorphic same-degree graphs") {
    // both are 2-regular-ish on 6 vertices: two directed triangles vs one
    // directed hexagon
    const Digraph two_triangles =
        disjoint_union(corpus::directed_cycle(3), corpus::directed_cycle(3));
    const Digraph hexagon = corpus::directed_cycle(6);
    CHECK(canonical_form(two_triangles) != canonical_form(hexagon));
    CHECK_FALSE(isomorphic(two_triangles, hexagon));
}

TEST_CASE("isomorphic rejects different sizes quickly") {
    CHECK_FALSE(isomorphic(Digraph(2), Digraph(3)));
    CHECK(isomorphic(Digraph(0), Digraph(0)));
}

TEST_CASE("canonical form is capped at 8 vertices") {
    CHECK_NOTHROW(canonical_form(Digraph(kCanonicalMaxVertices)));
    CHECK_THROWS_AS(canonical_form(Digraph(kCanonicalMaxVertices + 1)), TooLargeError);
}
