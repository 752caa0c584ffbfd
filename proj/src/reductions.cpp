#include "tdcol/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tdcol/errors.hpp"

namespace tdcol {

bool BipartiteInstance::has_edge(int w, int b) const {
    return std::find(edges.begin(), edges.end(), std::make_pair(w, b)) != edges.end();
}

void validate_bipartite(const BipartiteInstance& b) {
    if (b.whites < 0 || b.blacks < 0) throw RangeError("negative side size");
    std::set<std::pair<int, int>> seen;
    for (auto [w, bk] : b.edges) {
        if (w < 0 || w >= b.whites || bk < 0 || bk >= b.blacks)
            throw RangeError("edge endpoint out of range");
        if (!seen.insert({w, bk}).second) throw RangeError("duplicate edge");
    }
    auto check_side = [](const std::vector<int>& embed, int count, const char* side) {
        if (!embed.empty() && static_cast<int>(embed.size()) != count)
            throw RangeError(std::string("embed marks must cover all ") + side + " or none");
        for (int e : embed)
            if (e < -1) throw RangeError("embed mark out of range");
    };
    check_side(b.embed_white, b.whites, "whites");
    check_side(b.embed_black, b.blacks, "blacks");
    if (!b.white_lists.empty() && static_cast<int>(b.white_lists.size()) != b.whites)
        throw RangeError("white lists must cover all whites or none");
    if (!b.black_lists.empty() && static_cast<int>(b.black_lists.size()) != b.blacks)
        throw RangeError("black lists must cover all blacks or none");
}

bool domination_free(const BipartiteInstance& h) {
    std::vector<std::set<int>> nb(h.whites);
    for (auto [w, b] : h.edges) nb[w].insert(b);
    for (int a = 0; a < h.whites; ++a)
        for (int b = 0; b < h.whites; ++b) {
            if (a == b) continue;
            if (std::includes(nb[b].begin(), nb[b].end(), nb[a].begin(), nb[a].end()))
                return false;
        }
    return true;
}

namespace {

// For each target white/black, the instance vertex marked as its copy.
std::pair<std::vector<int>, std::vector<int>> require_embedding(const BipartiteInstance& g,
                                                                const BipartiteInstance& h) {
    std::vector<int> ew = g.embed_white.empty() ? std::vector<int>(g.whites, -1) : g.embed_white;
    std::vector<int> eb = g.embed_black.empty() ? std::vector<int>(g.blacks, -1) : g.embed_black;
    std::vector<int> w_of(h.whites, -1), b_of(h.blacks, -1);
    auto fill = [](const std::vector<int>& marks, std::vector<int>& of, const char* side) {
        for (int v = 0; v < static_cast<int>(marks.size()); ++v) {
            const int i = marks[v];
            if (i == -1) continue;
            if (i < 0 || i >= static_cast<int>(of.size()))
                throw NoEmbeddingError(std::string("marked ") + side + " out of target range");
            if (of[i] != -1)
                throw NoEmbeddingError(std::string("target ") + side + " marked twice");
            of[i] = v;
        }
        for (int i = 0; i < static_cast<int>(of.size()); ++i)
            if (of[i] == -1)
                throw NoEmbeddingError(std::string("target ") + side + " " + std::to_string(i) +
                                       " has no marked copy");
    };
    fill(ew, w_of, "white");
    fill(eb, b_of, "black");
    for (auto [i, j] : h.edges)
        if (!g.has_edge(w_of[i], b_of[j]))
            throw NoEmbeddingError("marked copy is missing a target edge");
    return {w_of, b_of};
}

// Shared worker for the level-gadget construction.  wi[w] is the 1-based
// target-white index of instance white w (0 when unmarked), bi likewise.
LevelledDigraph attach_gadgets(const BipartiteInstance& g, const std::vector<int>& wi,
                               const std::vector<int>& bi, int n) {
    std::vector<int> level;
    auto fresh = [&](int lv) {
        level.push_back(lv);
        return static_cast<int>(level.size()) - 1;
    };
    // wpath[w][pos] / bpath[b][pos] hold the one or two vertices realizing a
    // path position; positions are 0-based here, levels 1-based.
    std::vector<std::vector<std::vector<int>>> wpath(g.whites), bpath(g.blacks);
    for (int w = 0; w < g.whites; ++w) {
        wpath[w].resize(n + 2);
        for (int pos = 1; pos <= n + 2; ++pos) {
            const bool dup = pos == 1 || (wi[w] != 0 && pos == wi[w] + 1);
            wpath[w][pos - 1].push_back(fresh(pos));
            if (dup) wpath[w][pos - 1].push_back(fresh(pos));
        }
    }
    for (int b = 0; b < g.blacks; ++b) {
        bpath[b].resize(n + 2);
        for (int pos = 1; pos <= n + 2; ++pos) {
            const bool dup = pos == n + 2 || (bi[b] != 0 && pos == bi[b] + 1);
            bpath[b][pos - 1].push_back(fresh(n + 2 + pos));
            if (dup) bpath[b][pos - 1].push_back(fresh(n + 2 + pos));
        }
    }

    const int total = static_cast<int>(level.size());
    Digraph raw(total);
    auto chain = [&](const std::vector<std::vector<int>>& path) {
        for (std::size_t pos = 0; pos + 1 < path.size(); ++pos)
            for (int a : path[pos])
                for (int c : path[pos + 1]) raw.add_arc(a, c);
        for (const auto& cell : path)
            if (cell.size() == 2) {
                raw.add_arc(cell[0], cell[1]);
                raw.add_arc(cell[1], cell[0]);
            }
    };
    for (const auto& p : wpath) chain(p);
    for (const auto& p : bpath) chain(p);
    // instance whites sit at the end of their path, blacks at the start
    for (auto [w, b] : g.edges) raw.add_arc(wpath[w][n + 1][0], bpath[b][0][0]);

    const Digraph closed = transitive_closure(raw);
    std::vector<int> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int c) { return level[a] < level[c]; });
    std::vector<int> newid(total);
    for (int i = 0; i < total; ++i) newid[order[i]] = i;

    LevelledDigraph out;
    out.digraph = Digraph(total);
    out.level.resize(total);
    for (int i = 0; i < total; ++i) out.level[newid[i]] = level[i];
    for (auto [u, v] : closed.arcs()) out.digraph.add_arc(newid[u], newid[v]);
    return out;
}

int gadget_side(const BipartiteInstance& h) {
    const int n = std::max(h.whites, h.blacks);
    if (n > kMaxGadgetSide)
        throw SideTooLargeError("gadget target side capped at " +
                                std::to_string(kMaxGadgetSide) + " vertices");
    return n;
}

Digraph symmetric_encoding(const BipartiteInstance& b) {
    Digraph d(b.whites + b.blacks);
    for (auto [w, bk] : b.edges) {
        d.add_arc(w, b.whites + bk);
        d.add_arc(b.whites + bk, w);
    }
    return d;
}

std::vector<int> iota_list(int from, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

LevelledDigraph build_here_target(const BipartiteInstance& h) {
    validate_bipartite(h);
    const int n = gadget_side(h);
    std::vector<int> wi(h.whites), bi(h.blacks);
    std::iota(wi.begin(), wi.end(), 1);
    std::iota(bi.begin(), bi.end(), 1);
    return attach_gadgets(h, wi, bi, n);
}

LevelledDigraph transform_here_instance(const BipartiteInstance& g, const BipartiteInstance& h) {
    validate_bipartite(g);
    validate_bipartite(h);
    const int n = gadget_side(h);
    auto [w_of, b_of] = require_embedding(g, h);
    std::vector<int> wi(g.whites, 0), bi(g.blacks, 0);
    for (int i = 0; i < h.whites; ++i) wi[w_of[i]] = i + 1;
    for (int j = 0; j < h.blacks; ++j) bi[b_of[j]] = j + 1;
    return attach_gadgets(g, wi, bi, n);
}

LabelledMatrix build_csp_matrix(const BipartiteInstance& h) {
    validate_bipartite(h);
    if (!domination_free(h))
        throw NotDominationFreeError("target whites are not domination-free");
    const int p = h.whites, q = h.blacks;
    LabelledMatrix out;
    out.matrix = PartitionMatrix(p + 3 * q);
    for (int i = 0; i < out.matrix.size(); ++i)
        for (int j = 0; j < out.matrix.size(); ++j) out.matrix.set(i, j, Entry::Zero);
    for (auto [w, b] : h.edges)
        for (int k = 0; k < 3; ++k) out.matrix.set(w, p + 3 * b + k, Entry::Star);
    for (int b = 0; b < q; ++b) {
        out.matrix.set(p + 3 * b, p + 3 * b + 1, Entry::One);
        out.matrix.set(p + 3 * b + 1, p + 3 * b, Entry::One);
    }
    for (int w = 0; w < p; ++w) out.labels.push_back("w" + std::to_string(w));
    for (int b = 0; b < q; ++b)
        for (int k = 1; k <= 3; ++k)
            out.labels.push_back("b" + std::to_string(b) + "." + std::to_string(k));
    return out;
}

LabelledMatrix build_loops_matrix(const BipartiteInstance& h) {
    validate_bipartite(h);
    if (!domination_free(h))
        throw NotDominationFreeError("target whites are not domination-free");
    const int p = h.whites, q = h.blacks;
    LabelledMatrix out;
    out.matrix = PartitionMatrix(p + 2 * q);
    for (int i = 0; i < out.matrix.size(); ++i)
        for (int j = 0; j < out.matrix.size(); ++j) out.matrix.set(i, j, Entry::Zero);
    for (auto [w, b] : h.edges)
        for (int k = 0; k < 2; ++k) out.matrix.set(w, p + 2 * b + k, Entry::Star);
    for (int b = 0; b < q; ++b) out.matrix.set(p + 2 * b + 1, p + 2 * b + 1, Entry::One);
    for (int w = 0; w < p; ++w) out.labels.push_back("w" + std::to_string(w));
    for (int b = 0; b < q; ++b)
        for (int k = 1; k <= 2; ++k)
            out.labels.push_back("b" + std::to_string(b) + "." + std::to_string(k));
    return out;
}

Digraph transform_csp_instance(const BipartiteInstance& g, const BipartiteInstance& h) {
    validate_bipartite(g);
    validate_bipartite(h);
    require_embedding(g, h);
    const std::vector<int> eb =
        g.embed_black.empty() ? std::vector<int>(g.blacks, -1) : g.embed_black;
    std::vector<int> first(g.blacks), copies(g.blacks);
    int next = g.whites;
    for (int b = 0; b < g.blacks; ++b) {
        first[b] = next;
        copies[b] = eb[b] != -1 ? 2 : 1;
        next += copies[b];
    }
    Digraph out(next);
    for (auto [w, b] : g.edges)
        for (int c = 0; c < copies[b]; ++c) out.add_arc(w, first[b] + c);
    for (int b = 0; b < g.blacks; ++b)
        if (copies[b] == 2) {
            out.add_arc(first[b], first[b] + 1);
            out.add_arc(first[b] + 1, first[b]);
        }
    if (!is_transitive(out)) throw Error("csp transform produced a non-transitive digraph");
    return out;
}

std::vector<BipartiteInstance> expand_turing(const Digraph& gp, const PartitionMatrix& m,
                                             const BipartiteInstance& h) {
    if (!is_transitive(gp))
        throw PreconditionViolatedError("expansion expects a transitive digraph");
    if (!(m == build_csp_matrix(h).matrix))
        throw PreconditionViolatedError("matrix is not the csp matrix of this target");

    const int n = gp.n();
    std::vector<std::vector<int>> digons;
    for (const auto& comp : strong_components(gp)) {
        if (comp.size() >= 3) return {};
        if (comp.size() == 2) digons.push_back(comp);
    }
    std::vector<int> twin(n, -1);
    for (const auto& d : digons) {
        twin[d[0]] = d[1];
        twin[d[1]] = d[0];
    }

    // Read sides off the orientation: arcs must run white -> black, digons
    // are pinned black.  Any vertex forced to both sides makes every
    // assignment unsatisfiable.
    enum : char { White, Black };
    std::vector<char> side(n, White);
    for (int v = 0; v < n; ++v) {
        bool arc_out = false, arc_in = false;
        for (int u = 0; u < n; ++u) {
            if (u == v || u == twin[v]) continue;
            arc_out = arc_out || gp.has_arc(v, u);
            arc_in = arc_in || gp.has_arc(u, v);
        }
        if (twin[v] != -1) {
            if (arc_out) return {};
            side[v] = Black;
        } else if (arc_out && arc_in) {
            return {};
        } else {
            side[v] = arc_in ? Black : White;
        }
    }

    // contracted vertex ids, whites and blacks numbered by smallest member
    std::vector<int> wid(n, -1), bid(n, -1), reps;
    int p2 = 0;
    for (int v = 0; v < n; ++v)
        if (side[v] == White) wid[v] = p2++;
    for (int v = 0; v < n; ++v)
        if (side[v] == Black && (twin[v] == -1 || v < twin[v])) reps.push_back(v);
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) bid[reps[i]] = i;
    for (int v = 0; v < n; ++v)
        if (twin[v] != -1 && bid[v] == -1) bid[v] = bid[twin[v]];

    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : gp.arcs())
        if (twin[u] != v) edge_set.insert({wid[u], bid[v]});

    BipartiteInstance base;
    base.whites = p2;
    base.blacks = static_cast<int>(reps.size());
    base.edges.assign(edge_set.begin(), edge_set.end());
    base.black_lists.assign(base.blacks, iota_list(0, h.blacks));

    std::vector<BipartiteInstance> out;
    std::vector<int> assignment(digons.size());
    std::vector<char> used(h.blacks, 0);
    auto emit = [&]() {
        BipartiteInstance inst = base;
        for (std::size_t d = 0; d < digons.size(); ++d)
            inst.black_lists[bid[digons[d][0]]] = {assignment[d]};
        out.push_back(std::move(inst));
    };
    auto rec = [&](auto&& self, std::size_t d) -> void {
        if (d == digons.size()) {
            emit();
            return;
        }
        for (int x = 0; x < h.blacks; ++x) {
            if (used[x]) continue;
            used[x] = 1;
            assignment[d] = x;
            self(self, d + 1);
            used[x] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

std::optional<Certificate> bip_solve(const BipartiteInstance& g, const BipartiteInstance& h,
                                     const Lists& lists) {
    return find_hom(symmetric_encoding(g), symmetric_encoding(h), lists);
}

Lists side_full_lists(const BipartiteInstance& g, const BipartiteInstance& h) {
    Lists lists(g.whites + g.blacks);
    for (int w = 0; w < g.whites; ++w) lists[w] = iota_list(0, h.whites);
    for (int b = 0; b < g.blacks; ++b) lists[g.whites + b] = iota_list(h.whites, h.blacks);
    return lists;
}

}  // namespace

std::optional<Certificate> bip_list_hom(const BipartiteInstance& g, const BipartiteInstance& h) {
    validate_bipartite(g);
    validate_bipartite(h);
    Lists lists = side_full_lists(g, h);
    if (!g.white_lists.empty())
        for (int w = 0; w < g.whites; ++w) {
            lists[w].clear();
            for (int i : g.white_lists[w]) {
                if (i < 0 || i >= h.whites)
                    throw BadListsError("white list entry out of target range");
                lists[w].push_back(i);
            }
        }
    if (!g.black_lists.empty())
        for (int b = 0; b < g.blacks; ++b) {
            lists[g.whites + b].clear();
            for (int j : g.black_lists[b]) {
                if (j < 0 || j >= h.blacks)
                    throw BadListsError("black list entry out of target range");
                lists[g.whites + b].push_back(h.whites + j);
            }
        }
    return bip_solve(g, h, lists);
}

std::optional<Certificate> bip_retraction(const BipartiteInstance& g, const BipartiteInstance& h) {
    validate_bipartite(g);
    validate_bipartite(h);
    auto [w_of, b_of] = require_embedding(g, h);
    Lists lists = side_full_lists(g, h);
    for (int i = 0; i < h.whites; ++i) lists[w_of[i]] = {i};
    for (int j = 0; j < h.blacks; ++j) lists[g.whites + b_of[j]] = {h.whites + j};
    return bip_solve(g, h, lists);
}

std::optional<Certificate> bip_black_retraction(const BipartiteInstance& g,
                                                const BipartiteInstance& h) {
    validate_bipartite(g);
    validate_bipartite(h);
    auto [w_of, b_of] = require_embedding(g, h);
    (void)w_of;
    Lists lists = side_full_lists(g, h);
    for (int j = 0; j < h.blacks; ++j) lists[g.whites + b_of[j]] = {h.whites + j};
    return bip_solve(g, h, lists);
}

}  // namespace tdcol
