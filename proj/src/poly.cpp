#include "tdcol/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iostream>
#include <numeric>

#include "tdcol/condensation.hpp"
#include "tdcol/errors.hpp"
#include "tdcol/subsets.hpp"
#include "tdcol/twosat.hpp"

namespace tdcol {

namespace {

void require_transitive(const Digraph& g, const char* who) {
    if (!is_transitive(g))
        throw PreconditionViolatedError(std::string(who) + " requires a transitive input");
}

// Largest set of pairwise digon-joined vertices of h.
int max_strong_clique(const Digraph& h) {
    const int n = h.n();
    if (n > 64) throw TooLargeError("target clique search capped at 64 vertices");
    std::vector<std::uint64_t> digon(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && h.has_digon(u, v)) digon[u] |= std::uint64_t{1} << v;
    int best = 0;
    auto grow = [&](auto&& self, std::uint64_t cand, int size) -> void {
        best = std::max(best, size);
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & digon[v], size + 1);
        }
    };
    grow(grow, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
    return best;
}

// Largest transitive tournament inside h, built by repeatedly appending a
// vertex dominated by everything chosen so far (each tournament arises in
// exactly one order).
int max_transitive_tournament(const Digraph& h) {
    const int n = h.n();
    if (n > 64) throw TooLargeError("target tournament search capped at 64 vertices");
    std::vector<std::uint64_t> out(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && h.has_arc(u, v)) out[u] |= std::uint64_t{1} << v;
    int best = 0;
    auto grow = [&](auto&& self, std::uint64_t cand, int size) -> void {
        best = std::max(best, size);
        if (size + std::popcount(cand) <= best) return;
        std::uint64_t it = cand;
        while (it) {
            const int v = std::countr_zero(it);
            it &= it - 1;
            self(self, cand & out[v], size + 1);
        }
    };
    grow(grow, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
    return best;
}

}  // namespace

Digraph fig2_target() {
    return Digraph(4, {{0, 1}, {1, 0}, {0, 2}, {1, 2}, {3, 0}, {3, 1}});
}

bool hom_symmetric_target(const Digraph& g, const Digraph& h) {
    require_transitive(g, "hom_symmetric_target");
    if (!classify_target(h).symmetric)
        throw PreconditionViolatedError("hom_symmetric_target requires a symmetric target");
    return max_weighted_chain(condense(g)) <= max_strong_clique(h);
}

bool hom_asymmetric_target(const Digraph& g, const Digraph& h) {
    require_transitive(g, "hom_asymmetric_target");
    if (!classify_target(h).asymmetric)
        throw PreconditionViolatedError("hom_asymmetric_target requires an asymmetric target");
    if (!classify_target(g).asymmetric) return false;  // a digon cannot map anywhere
    return max_weighted_chain(condense(g)) <= max_transitive_tournament(h);
}

bool hom_semicomplete_transitive(const Digraph& g, const Digraph& h) {
    require_transitive(g, "hom_semicomplete_transitive");
    {
        const auto flags = classify_target(h);
        if (!flags.semicomplete || !flags.transitive)
            throw PreconditionViolatedError(
                "hom_semicomplete_transitive requires a semi-complete transitive target");
    }
    Digraph gg = g, hh = h;
    while (true) {
        if (gg.n() == 0) return true;
        if (hh.n() == 0) return false;

        const auto hcomps = strong_components(hh);
        int initial = -1;
        for (int c = 0; c < static_cast<int>(hcomps.size()); ++c) {
            bool has_in = false;
            for (int v : hcomps[c])
                for (int u = 0; u < hh.n(); ++u)
                    if (hh.has_arc(u, v) && !std::binary_search(hcomps[c].begin(), hcomps[c].end(), u))
                        has_in = true;
            if (!has_in) {
                if (initial != -1)
                    throw Error("semi-complete transitive target with two initial components");
                initial = c;
            }
        }
        const int a = static_cast<int>(hcomps[initial].size());

        const auto gcomps = strong_components(gg);
        std::vector<char> drop(gg.n(), 0);
        for (const auto& comp : gcomps) {
            if (static_cast<int>(comp.size()) > a) continue;
            bool has_in = false;
            for (int v : comp)
                for (int u = 0; u < gg.n(); ++u)
                    if (gg.has_arc(u, v) && !std::binary_search(comp.begin(), comp.end(), u))
                        has_in = true;
            if (!has_in) drop[comp.front()] = 1;
        }
        std::vector<int> keep;
        for (int v = 0; v < gg.n(); ++v)
            if (!drop[v]) keep.push_back(v);
        gg = induced_subgraph(gg, keep);
        hh = delete_vertex(hh, hcomps[initial].front());
    }
}

std::optional<Certificate> hom_fig2(const Digraph& g) {
    require_transitive(g, "hom_fig2");
    const int n = g.n();
    if (n == 0) return Certificate{CertKind::Homomorphism, {}};

    const auto comps = strong_components(g);
    for (const auto& c : comps)
        if (c.size() >= 3) return std::nullopt;  // no strong clique that big in the target
    if (max_weighted_chain(condense(g)) >= 4) return std::nullopt;  // no chain that long either

    // drop isolated vertices (they go to a) and one half of every digon
    std::vector<char> in_core(n, 1), digon_half(n, 0);
    for (int v = 0; v < n; ++v)
        if (g.in_degree(v) == 0 && g.out_degree(v) == 0) in_core[v] = 0;
    for (const auto& c : comps)
        if (c.size() == 2) {
            digon_half[c[0]] = digon_half[c[1]] = 1;
            in_core[c[1]] = 0;  // keep the smaller-indexed twin
        }

    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (auto [u, v] : g.arcs())
        if (in_core[u] && in_core[v]) {
            ++outdeg[u];
            ++indeg[v];
        }

    // sources carry a variable meaning "maps to y", sinks one meaning "maps
    // to x"; everything else must land on the digon {a, b}
    std::vector<int> var(n, -1);
    int vars = 0;
    for (int v = 0; v < n; ++v)
        if (in_core[v] && (indeg[v] == 0 || outdeg[v] == 0)) var[v] = vars++;

    for (int v = 0; v < n; ++v)
        if (in_core[v] && var[v] == -1 && digon_half[v]) {
            std::cerr << "hom_fig2 anomaly: digon classified intermediate\n";
            return std::nullopt;
        }

    TwoSatInstance sat(vars);
    for (int v = 0; v < n; ++v)
        if (in_core[v] && var[v] != -1 && digon_half[v]) sat.add_unit({var[v], false});
    for (auto [u, v] : g.arcs()) {
        if (!in_core[u] || !in_core[v]) continue;
        if (indeg[u] != 0 || outdeg[v] != 0) continue;  // only source -> sink arcs
        if (!digon_half[u] && !digon_half[v])
            sat.add_clause({var[u], false}, {var[v], false});
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && g.has_arc(u, w) && g.has_arc(w, v)) {
                // an in-between vertex in the *original* digraph (incl. the
                // removed twins) forbids sending both ends to the digon
                sat.add_clause({var[u], true}, {var[v], true});
                break;
            }
    }

    const auto solution = solve_2sat(sat);
    if (!solution) return std::nullopt;

    std::vector<int> image(n, -1);
    std::vector<char> to_two_colour(n, 0);
    for (int v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0 && g.out_degree(v) == 0) {
            image[v] = 0;  // isolated vertices sit on a
        } else if (in_core[v] && var[v] != -1 && (*solution)[var[v]]) {
            image[v] = outdeg[v] == 0 ? 2 : 3;  // sinks to x, sources to y
        } else {
            to_two_colour[v] = 1;  // includes both digon halves
        }
    }

    // proper 2-colouring of the underlying graph on the leftover vertices
    for (int root = 0; root < n; ++root) {
        if (!to_two_colour[root] || image[root] != -1) continue;
        image[root] = 0;
        std::vector<int> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int w = 0; w < n; ++w) {
                if (!to_two_colour[w] || (!g.has_arc(u, w) && !g.has_arc(w, u))) continue;
                if (image[w] == -1) {
                    image[w] = 1 - image[u];
                    queue.push_back(w);
                } else if (image[w] == image[u]) {
                    std::cerr << "hom_fig2 anomaly: leftover set not bipartite\n";
                    return std::nullopt;
                }
            }
        }
    }

    Certificate cert{CertKind::Homomorphism, std::move(image)};
    if (!verify(g, fig2_target(), cert)) {
        std::cerr << "hom_fig2 anomaly: assembled certificate failed verification\n";
        return std::nullopt;
    }
    return cert;
}

std::optional<Certificate> colour_underlying(const Digraph& g, int k) {
    require_transitive(g, "colour_underlying");
    if (k < 0) throw RangeError("negative colour count");
    const auto cond = condense(g);
    const auto comps = strong_components(g);
    const int p = cond.skeleton.n();

    // end_level[j]: heaviest chain ending at clique j, counting its members
    std::vector<int> end_level(p, 0), indeg(p, 0), ready;
    for (auto [u, v] : cond.skeleton.arcs()) ++indeg[v];
    for (int j = 0; j < p; ++j)
        if (indeg[j] == 0) ready.push_back(j);
    while (!ready.empty()) {
        const int j = ready.back();
        ready.pop_back();
        end_level[j] += cond.multiplicity[j];
        for (int w = 0; w < p; ++w)
            if (cond.skeleton.has_arc(j, w)) {
                end_level[w] = std::max(end_level[w], end_level[j]);
                if (--indeg[w] == 0) ready.push_back(w);
            }
    }
    for (int j = 0; j < p; ++j)
        if (end_level[j] > k) return std::nullopt;

    std::vector<int> colour(g.n(), 0);
    for (int j = 0; j < p; ++j)
        for (int r = 0; r < static_cast<int>(comps[j].size()); ++r)
            colour[comps[j][r]] = end_level[j] - cond.multiplicity[j] + r;
    return Certificate{CertKind::Partition, std::move(colour)};
}

std::optional<Certificate> kl_colour(const Digraph& g, int k, int l) {
    require_transitive(g, "kl_colour");
    if (k < 0 || l < 0) throw RangeError("negative part count");
    const auto comps = strong_components(g);
    const int c = static_cast<int>(comps.size());

    if (c <= l) {
        std::vector<int> part(g.n(), 0);
        for (int i = 0; i < c; ++i)
            for (int v : comps[i]) part[v] = k + i;
        return Certificate{CertKind::Partition, std::move(part)};
    }
    if (k == 0) return std::nullopt;  // more components than clique parts

    auto chosen = first_combination(l);
    do {
        std::vector<char> removed(g.n(), 0);
        for (int idx : chosen)
            for (int v : comps[idx]) removed[v] = 1;
        std::vector<int> kept;
        for (int v = 0; v < g.n(); ++v)
            if (!removed[v]) kept.push_back(v);
        const auto colouring = colour_underlying(induced_subgraph(g, kept), k);
        if (!colouring) continue;
        std::vector<int> part(g.n(), 0);
        for (int i = 0; i < static_cast<int>(kept.size()); ++i)
            part[kept[i]] = colouring->assignment[i];
        for (int s = 0; s < l; ++s)
            for (int v : comps[chosen[s]]) part[v] = k + s;
        return Certificate{CertKind::Partition, std::move(part)};
    } while (next_combination(chosen, c));
    return std::nullopt;
}

DichromaticResult dichromatic(const Digraph& g) {
    require_transitive(g, "dichromatic");
    if (g.n() == 0) throw EmptyGraphError("dichromatic number of the empty digraph is undefined");
    const auto comps = strong_components(g);
    int k = 0;
    std::vector<int> part(g.n(), 0);
    for (const auto& comp : comps) {
        k = std::max(k, static_cast<int>(comp.size()));
        for (int r = 0; r < static_cast<int>(comp.size()); ++r) part[comp[r]] = r;
    }
    return {k, Certificate{CertKind::Partition, std::move(part)}};
}

bool mpartition_ones_diag(const Digraph& g, const PartitionMatrix& m) {
    require_transitive(g, "mpartition_ones_diag");
    for (int i = 0; i < m.size(); ++i)
        if (m.at(i, i) != Entry::One)
            throw PreconditionViolatedError("mpartition_ones_diag requires an all-ones diagonal");
    const int n = g.n(), cap = m.size() + 1;
    if (n <= cap) return find_mpartition(g, m).has_value();
    auto subset = first_combination(cap);
    do {
        if (!find_mpartition(induced_subgraph(g, subset), m)) return false;
    } while (next_combination(subset, n));
    return true;
}

}  // namespace tdcol
