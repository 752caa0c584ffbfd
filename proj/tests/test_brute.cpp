#include <functional>
#include <optional>
#include <vector>

#include "doctest.h"
#include "tdcol/brute.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/enumerate.hpp"
#include "tdcol/errors.hpp"
#include "tdcol/matrix.hpp"

#include "corpus.hpp"

using namespace tdcol;

namespace {

// Ground truth for homomorphism existence: try all |V(H)|^|V(G)| maps.
bool hom_exists_by_enumeration(const Digraph& g, const Digraph& h) {
    const int n = g.n(), m = h.n();
    if (n == 0) return true;
    if (m == 0) return false;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.arcs())
            if (!h.has_arc(f[u], f[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) return false;
    }
}

std::size_t hom_count_by_enumeration(const Digraph& g, const Digraph& h) {
    const int n = g.n(), m = h.n();
    if (n == 0) return 1;
    if (m == 0) return 0;
    std::size_t count = 0;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.arcs())
            if (!h.has_arc(f[u], f[v])) {
                ok = false;
                break;
            }
        if (ok) ++count;
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) return count;
    }
}

bool part_is_acyclic(const Digraph& g, const std::vector<int>& part, int pid) {
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v)
        if (part[v] == pid) members.push_back(v);
    // repeatedly remove sinks; a leftover means a cycle
    std::vector<char> alive(members.size(), 1);
    for (std::size_t round = 0; round < members.size(); ++round) {
        bool removed = false;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!alive[i]) continue;
            bool sink = true;
            for (std::size_t j = 0; j < members.size() && sink; ++j)
                if (alive[j] && j != i && g.has_arc(members[i], members[j])) sink = false;
            if (sink) {
                alive[i] = 0;
                removed = true;
            }
        }
        if (!removed) break;
    }
    for (char a : alive)
        if (a) return false;
    return true;
}

bool acyclic_partition_by_enumeration(const Digraph& g, int parts) {
    const int n = g.n();
    if (n == 0) return true;
    if (parts == 0) return false;
    std::vector<int> f(n, 0);
    while (true) {
        bool ok = true;
        for (int pid = 0; pid < parts && ok; ++pid) ok = part_is_acyclic(g, f, pid);
        if (ok) return true;
        int i = 0;
        while (i < n && ++f[i] == parts) f[i++] = 0;
        if (i == n) return false;
    }
}

}  // namespace

TEST_CASE("find_hom on landmark cases") {
    const Digraph digon = corpus::digon();
    CHECK(find_hom(digon, digon).has_value());
    CHECK_FALSE(find_hom(transitive_tournament(4), transitive_tournament(3)).has_value());
    CHECK(find_hom(transitive_tournament(3), transitive_tournament(3)).has_value());
    // a digon cannot map to a loop-free single arc
    CHECK_FALSE(find_hom(digon, transitive_tournament(2)).has_value());
    // directed triangle maps to itself but not to a digon
    const Digraph c3 = corpus::directed_cycle(3);
    CHECK(find_hom(c3, c3).has_value());
    CHECK_FALSE(find_hom(c3, digon).has_value());
    // empty instance maps anywhere, nothing maps to the empty target
    CHECK(find_hom(Digraph(0), digon).has_value());
    CHECK_FALSE(find_hom(Digraph(1), Digraph(0)).has_value());
}

TEST_CASE("find_hom agrees with full map enumeration on every small pair") {
    std::vector<Digraph> universe;
    for (int n = 0; n <= 3; ++n)
        for (const Digraph& d : corpus::all_digraphs(n)) universe.push_back(d);
    for (const Digraph& g : universe)
        for (const Digraph& h : universe) {
            const auto got = find_hom(g, h);
            CHECK(got.has_value() == hom_exists_by_enumeration(g, h));
            if (got) CHECK(verify(g, h, *got));
        }
}

TEST_CASE("find_hom agrees with enumeration for transitive instances against 4-vertex targets") {
    const std::vector<Digraph> targets = {
        transitive_tournament(4),
        disjoint_union(corpus::digon(), transitive_tournament(2)),
        strong_clique(4),
    };
    for (int n = 1; n <= 5; ++n)
        for (const Digraph& g : enumerate_transitive(n))
            for (const Digraph& h : targets) {
                const auto got = find_hom(g, h);
                CHECK(got.has_value() == hom_exists_by_enumeration(g, h));
                if (got) CHECK(verify(g, h, *got));
            }
}

TEST_CASE("lists restrict the search") {
    const Digraph g = transitive_tournament(2);
    const Digraph h = transitive_tournament(3);
    // force 0 onto the sink of h: no out-arc available for the arc 0->1
    Lists lists{{2}, {0, 1, 2}};
    CHECK_FALSE(find_hom(g, h, lists).has_value());
    Lists open{{0}, {1, 2}};
    const auto got = find_hom(g, h, open);
    REQUIRE(got.has_value());
    CHECK(got->assignment[0] == 0);

    CHECK_THROWS_AS(find_hom(g, h, Lists{{0}}), BadListsError);          // wrong length
    CHECK_THROWS_AS(find_hom(g, h, Lists{{0}, {3}}), BadListsError);     // out of range
    Lists empty_for_one{{}, {0}};
    CHECK_FALSE(find_hom(g, h, empty_for_one).has_value());             // empty list = no
}

TEST_CASE("all_homs enumerates exactly the homomorphisms") {
    const std::vector<std::pair<Digraph, Digraph>> pairs = {
        {transitive_tournament(2), transitive_tournament(3)},
        {corpus::digon(), strong_clique(3)},
        {Digraph(2), transitive_tournament(2)},
        {corpus::directed_cycle(3), corpus::directed_cycle(3)},
    };
    for (const auto& [g, h] : pairs) {
        const auto homs = all_homs(g, h);
        CHECK(homs.size() == hom_count_by_enumeration(g, h));
        for (const auto& cert : homs) CHECK(verify(g, h, cert));
        // lexicographic order of assignments, no duplicates
        for (std::size_t i = 1; i < homs.size(); ++i)
            CHECK(homs[i - 1].assignment < homs[i].assignment);
    }
    CHECK_THROWS_AS(all_homs(Digraph(3), strong_clique(3), 5), TooLargeError);
}

TEST_CASE("find_retraction pins the embedded copy") {
    // g = digon {0,1} plus vertex 2 pointing at one end
    Digraph g(3, {{0, 1}, {1, 0}, {2, 0}});
    const auto got = find_retraction(g, {0, 1}, corpus::digon());
    REQUIRE(got.has_value());
    CHECK(got->assignment[0] == 0);
    CHECK(got->assignment[1] == 1);
    // 2 -> 0 forces the image of 2 onto the end with an arc into 0
    CHECK(got->assignment[2] == 1);
    CHECK(verify(g, corpus::digon(), *got));

    // attaching 2 to both ends makes the underlying graph an odd cycle, so
    // nothing maps to the digon, pinned or not
    Digraph g3(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}});
    CHECK_FALSE(find_retraction(g3, {0, 1}, corpus::digon()).has_value());
    CHECK_FALSE(find_hom(g3, corpus::digon()).has_value());

    CHECK_THROWS_AS(find_retraction(g, {0}, corpus::digon()), NotEmbeddedError);
    CHECK_THROWS_AS(find_retraction(g, {0, 3}, corpus::digon()), NotEmbeddedError);
    CHECK_THROWS_AS(find_retraction(g, {0, 0}, corpus::digon()), NotEmbeddedError);
    // claimed copy misses the digon arc
    CHECK_THROWS_AS(find_retraction(g, {0, 2}, corpus::digon()), NotEmbeddedError);
}

TEST_CASE("find_mpartition matches enumeration and honours ONE/ZERO semantics") {
    // diag(0,1), off-diagonal STAR: one independent part, one clique part
    const PartitionMatrix m01 = kl_matrix(1, 1);
    // all-ONE 2x2: two cliques with all arcs both ways between them
    PartitionMatrix ones(2, {Entry::One, Entry::One, Entry::One, Entry::One});
    // zero diagonal with ONE pair: the csp-style strong-digon pattern
    PartitionMatrix digon_pair(3, {Entry::Zero, Entry::Star, Entry::Star,   //
                                   Entry::Zero, Entry::Zero, Entry::One,    //
                                   Entry::Zero, Entry::One, Entry::Zero});

    auto mpartition_by_enumeration = [](const Digraph& g, const PartitionMatrix& m) {
        const int n = g.n(), parts = m.size();
        if (n == 0) return true;
        if (parts == 0) return false;
        std::vector<int> f(n, 0);
        while (true) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v) {
                    if (u == v) continue;
                    const Entry e = m.at(f[u], f[v]);
                    if (e == Entry::One && !g.has_arc(u, v)) ok = false;
                    if (e == Entry::Zero && g.has_arc(u, v)) ok = false;
                }
            if (ok) return true;
            int i = 0;
            while (i < n && ++f[i] == parts) f[i++] = 0;
            if (i == n) return false;
        }
    };

    for (int n = 1; n <= 4; ++n)
        for (const Digraph& g : enumerate_transitive(n))
            for (const PartitionMatrix& m : {m01, ones, digon_pair}) {
                const auto got = find_mpartition(g, m);
                CHECK(got.has_value() == mpartition_by_enumeration(g, m));
                if (got) CHECK(verify(g, m, *got));
            }

    // fixed lists are honoured: a digon fits in the clique part but not in
    // the independent part
    Lists pin{{1}, {1}};
    CHECK(find_mpartition(corpus::digon(), kl_matrix(1, 1), pin).has_value());
    Lists clash{{0}, {0}};
    CHECK_FALSE(find_mpartition(corpus::digon(), kl_matrix(1, 1), clash).has_value());
}

TEST_CASE("find_acyclic_partition matches enumeration") {
    CHECK(find_acyclic_partition(transitive_tournament(3), 1).has_value());
    CHECK_FALSE(find_acyclic_partition(corpus::digon(), 1).has_value());
    CHECK(find_acyclic_partition(corpus::digon(), 2).has_value());
    CHECK_FALSE(find_acyclic_partition(strong_clique(3), 2).has_value());
    CHECK_THROWS_AS(find_acyclic_partition(Digraph(1), -1), RangeError);

    for (int n = 1; n <= 4; ++n)
        for (const Digraph& g : enumerate_transitive(n))
            for (int parts = 0; parts <= 3; ++parts) {
                const auto got = find_acyclic_partition(g, parts);
                CHECK(got.has_value() == acyclic_partition_by_enumeration(g, parts));
                if (got)
                    for (int pid = 0; pid < parts; ++pid)
                        CHECK(part_is_acyclic(g, got->assignment, pid));
            }
}

TEST_CASE("verify rejects mutated and ill-typed certificates") {
    const Digraph g = transitive_tournament(3);
    const auto cert = find_hom(g, g);
    REQUIRE(cert.has_value());
    REQUIRE(verify(g, g, *cert));

    // break one assignment: the identity-ish map must stop verifying for at
    // least one mutation of every vertex
    for (int v = 0; v < g.n(); ++v) {
        bool some_mutation_fails = false;
        for (int t = 0; t < g.n(); ++t) {
            if (t == cert->assignment[v]) continue;
            Certificate bad = *cert;
            bad.assignment[v] = t;
            if (!verify(g, g, bad)) some_mutation_fails = true;
        }
        CHECK(some_mutation_fails);
    }

    Certificate wrong_kind = *cert;
    wrong_kind.kind = CertKind::Partition;
    CHECK_FALSE(verify(g, g, wrong_kind));
    CHECK_FALSE(verify(g, kl_matrix(1, 1), *cert));  // hom cert against a matrix

    Certificate short_cert{CertKind::Homomorphism, {0, 1}};
    CHECK_FALSE(verify(g, g, short_cert));
    Certificate out_of_range{CertKind::Homomorphism, {0, 1, 5}};
    CHECK_FALSE(verify(g, g, out_of_range));

    // empty instance: the empty certificate verifies
    CHECK(verify(Digraph(0), g, Certificate{CertKind::Homomorphism, {}}));
}
