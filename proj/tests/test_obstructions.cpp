#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "tdcol/canonical.hpp"
#include "tdcol/condensation.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/errors.hpp"
#include "tdcol/matrix.hpp"
#include "tdcol/obstructions.hpp"

#include "corpus.hpp"

using namespace tdcol;

namespace {

std::set<std::uint64_t> canonical_keys(const ObstructionCatalogue& cat) {
    std::set<std::uint64_t> keys;
    for (const auto& item : cat.items) keys.insert(canonical_form(item.graph).bits);
    return keys;
}

}  // namespace

TEST_CASE("problem handles carry names and guard their accessors") {
    const auto hom = ProblemHandle::hom(transitive_tournament(2));
    CHECK(hom.name() == "hom(n=2;0>1)");
    CHECK(hom.target() == transitive_tournament(2));
    CHECK_THROWS_AS(hom.matrix(), PreconditionViolatedError);
    CHECK_THROWS_AS(hom.k(), PreconditionViolatedError);

    const auto mp = ProblemHandle::mpartition(kl_matrix(1, 1));
    CHECK(mp.name() == "mpartition(0*/*1)");
    CHECK_THROWS_AS(mp.target(), PreconditionViolatedError);

    const auto kl = ProblemHandle::kl(2, 1);
    CHECK(kl.name() == "kl(2,1)");
    CHECK(kl.k() == 2);
    CHECK(kl.l() == 1);

    const auto dc = ProblemHandle::dichromatic(3);
    CHECK(dc.name() == "dichromatic(3)");
    CHECK(dc.k() == 3);
    CHECK_THROWS_AS(dc.l(), PreconditionViolatedError);

    CHECK(ProblemHandle::hom(Digraph(1), "custom").name() == "custom");
    CHECK_THROWS_AS(ProblemHandle::kl(-1, 0), RangeError);
    CHECK_THROWS_AS(ProblemHandle::dichromatic(-1), RangeError);
}

TEST_CASE("minimal obstructions to mapping into a digon") {
    const auto p = ProblemHandle::hom(corpus::digon());
    // fails, and both deletions leave a single vertex
    CHECK(is_minimal_obstruction(transitive_tournament(3), p));
    CHECK(is_minimal_obstruction(strong_clique(3), p));
    // holds: not an obstruction
    CHECK_FALSE(is_minimal_obstruction(transitive_tournament(2), p));
    // fails but a deletion still fails: not minimal
    CHECK_FALSE(is_minimal_obstruction(transitive_tournament(4), p));
    CHECK_THROWS_AS(is_minimal_obstruction(corpus::directed_cycle(3), p),
                    PreconditionViolatedError);

    // the catalogue on <= 4 vertices is exactly the four 3-vertex
    // semi-complete transitive digraphs
    const auto cat = find_obstructions(p, 4);
    CHECK(cat.problem == p.name());
    CHECK(cat.n_max == 4);
    REQUIRE(cat.items.size() == 4);
    const std::set<std::uint64_t> want = {
        canonical_form(transitive_tournament(3)).bits,
        canonical_form(replicate(Condensation(transitive_tournament(2), {2, 1}))).bits,
        canonical_form(replicate(Condensation(transitive_tournament(2), {1, 2}))).bits,
        canonical_form(strong_clique(3)).bits,
    };
    CHECK(canonical_keys(cat) == want);
    for (const auto& item : cat.items) {
        CHECK(item.graph.n() == 3);
        CHECK(classify_target(item.graph).semicomplete);
    }
}

TEST_CASE("minimal obstructions to mapping into a single arc") {
    const auto cat = find_obstructions(ProblemHandle::hom(transitive_tournament(2)), 5);
    REQUIRE(cat.items.size() == 2);
    // sorted by size: the digon first, then the transitive triangle
    CHECK(isomorphic(cat.items[0].graph, corpus::digon()));
    CHECK(isomorphic(cat.items[1].graph, transitive_tournament(3)));
}

TEST_CASE("witnesses certify every one-vertex deletion") {
    const auto p = ProblemHandle::hom(corpus::digon());
    const auto cat = find_obstructions(p, 4);
    for (const auto& item : cat.items) {
        REQUIRE(item.witnesses.size() == static_cast<std::size_t>(item.graph.n()));
        for (int v = 0; v < item.graph.n(); ++v)
            CHECK(verify(delete_vertex(item.graph, v), p.target(), item.witnesses[v]));
    }

    const auto klp = ProblemHandle::kl(1, 0);
    const auto klcat = find_obstructions(klp, 4);
    REQUIRE(klcat.items.size() == 2);
    const std::set<std::uint64_t> want_kl = {
        canonical_form(transitive_tournament(2)).bits,
        canonical_form(corpus::digon()).bits,
    };
    CHECK(canonical_keys(klcat) == want_kl);
    for (const auto& item : klcat.items)
        for (int v = 0; v < item.graph.n(); ++v)
            CHECK(verify(delete_vertex(item.graph, v), kl_matrix(1, 0), item.witnesses[v]));
}

TEST_CASE("dichromatic obstructions are exactly the next strong clique") {
    const auto cat = find_obstructions(ProblemHandle::dichromatic(2), 4);
    REQUIRE(cat.items.size() == 1);
    CHECK(isomorphic(cat.items[0].graph, strong_clique(3)));
}

TEST_CASE("bound probe reports are internally consistent") {
    const KlBoundReport r = check_kl_bound(1, 1, 5);
    CHECK(r.k == 1);
    CHECK(r.l == 1);
    CHECK(r.n_max == 5);
    CHECK(r.bound == 4);
    CHECK_FALSE(r.sizes.empty());
    CHECK(std::is_sorted(r.sizes.begin(), r.sizes.end()));
    CHECK(r.max_size == *std::max_element(r.sizes.begin(), r.sizes.end()));
    CHECK(r.counterexample == (r.max_size > r.bound));
    CHECK(r.verdict() == (r.counterexample ? "counterexample found" : "consistent"));
    // the known largest minimal obstruction for one independent part and one
    // clique part has exactly four vertices
    CHECK(r.max_size == 4);

    // (0,0): only the empty digraph is colourable, so the single vertex is
    // the unique minimal obstruction
    const KlBoundReport zero = check_kl_bound(0, 0, 3);
    CHECK(zero.bound == 1);
    CHECK(zero.sizes == std::vector<int>{1});
    CHECK_FALSE(zero.counterexample);
}

TEST_CASE("scan validation") {
    const auto p = ProblemHandle::kl(1, 0);
    CHECK_THROWS_AS(find_obstructions(p, 0), RangeError);
    CHECK_THROWS_AS(find_obstructions(p, -3), RangeError);
    CHECK_THROWS_AS(find_obstructions(p, 9), TooLargeError);
}
