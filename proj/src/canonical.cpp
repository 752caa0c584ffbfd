#include "tdcol/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <tuple>
#include <vector>

#include "tdcol/errors.hpp"

namespace tdcol {

namespace {

// Iterated neighbourhood refinement.  Vertices end up labelled 0..k-1 such
// that any isomorphism maps label classes onto label classes, and the class
// order itself is isomorphism-invariant (classes are keyed by sorted
// signature values, never by vertex identity).
std::vector<int> refine(const Digraph& d) {
    const int n = d.n();
    std::vector<int> label(n);
    {
        std::map<std::tuple<int, int, int>, int> ids;
        std::vector<std::tuple<int, int, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            int digons = 0;
            for (int u = 0; u < n; ++u) digons += u != v && d.has_digon(u, v);
            sig[v] = {d.out_degree(v), d.in_degree(v), digons};
            ids[sig[v]] = 0;
        }
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) label[v] = ids[sig[v]];
    }
    for (int round = 0; round < n; ++round) {
        using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::vector<Sig> sig(n);
        std::map<Sig, int> ids;
        for (int v = 0; v < n; ++v) {
            std::vector<int> outs, ins;
            for (int u = 0; u < n; ++u) {
                if (d.has_arc(v, u)) outs.push_back(label[u]);
                if (d.has_arc(u, v)) ins.push_back(label[u]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig[v] = {label[v], std::move(outs), std::move(ins)};
            ids[sig[v]] = 0;
        }
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
        if (fresh == label) break;
        label = std::move(fresh);
    }
    return label;
}

struct LexMin {
    int n;
    std::array<std::uint8_t, kCanonicalMaxVertices> adj{};  // adj[u] bit v
    std::vector<int> block_of_position;                     // label expected at each position
    std::vector<int> label;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::array<int, kCanonicalMaxVertices> perm{};  // perm[position] = vertex
    std::uint8_t used = 0;

    std::uint64_t bit(int i, int j) const {
        return std::uint64_t{1} << (n * n - 1 - (i * n + j));
    }

    void dfs(int pos, std::uint64_t partial) {
        if (partial > best) return;
        if (pos == n) {
            best = partial;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (label[v] != block_of_position[pos]) continue;
            std::uint64_t next = partial;
            for (int s = 0; s < pos; ++s) {
                int w = perm[s];
                if ((adj[v] >> w) & 1) next |= bit(pos, s);
                if ((adj[w] >> v) & 1) next |= bit(s, pos);
            }
            perm[pos] = v;
            used |= std::uint8_t(1u << v);
            dfs(pos + 1, next);
            used &= std::uint8_t(~(1u << v));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Digraph& d) {
    const int n = d.n();
    if (n > kCanonicalMaxVertices)
        throw TooLargeError("canonical form limited to " +
                            std::to_string(kCanonicalMaxVertices) + " vertices");
    if (n == 0) return {0, 0};

    LexMin search;
    search.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && d.has_arc(u, v)) search.adj[u] |= std::uint8_t(1u << v);
    search.label = refine(d);
    search.block_of_position.assign(search.label.begin(), search.label.end());
    std::sort(search.block_of_position.begin(), search.block_of_position.end());
    search.dfs(0, 0);
    return {n, search.best};
}

bool isomorphic(const Digraph& a, const Digraph& b) {
    if (a.n() != b.n() || a.arc_count() != b.arc_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace tdcol
