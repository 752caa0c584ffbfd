#include "tdcol/brute.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "tdcol/errors.hpp"

namespace tdcol {

namespace {

using Mask = std::uint64_t;

// One constraint-propagation problem: vertex v's candidates are dom[v]; when
// v is fixed to t, any other vertex u may only keep candidates in
// allowed[rel(v,u)][t], where rel packs "arc v->u" into bit 0 and "arc u->v"
// into bit 1.  rel code 0 still prunes when the relation forbids non-arcs
// (M-partition with ONE entries).
struct FcProblem {
    int n = 0;
    int m = 0;
    std::vector<Mask> dom;
    std::vector<unsigned char> rel;           // n*n
    std::array<std::vector<Mask>, 4> allowed;  // [code][t]
    bool prune_unrelated = false;
};

std::optional<std::vector<int>> fc_solve(const FcProblem& p) {
    const int n = p.n;
    std::vector<int> assignment(n, -1);
    if (n == 0) return assignment;
    for (const Mask d : p.dom)
        if (!d) return std::nullopt;

    // Depth-indexed domain snapshots: doms[depth] is valid before assigning
    // the vertex chosen at that depth.
    std::vector<std::vector<Mask>> doms(n + 1, std::vector<Mask>(n));
    doms[0] = p.dom;
    std::vector<int> chosen(n, -1);
    std::vector<Mask> remaining(n, 0);
    int depth = 0;

    // Branch on the unassigned vertex with the fewest remaining candidates,
    // breaking ties by lowest index; candidate values are tried in ascending
    // order.  Fully deterministic, and singleton domains are consumed
    // immediately, which acts as free unit propagation.
    auto pick = [&](int d) {
        int best = -1, best_count = 65;
        for (int v = 0; v < n; ++v) {
            if (assignment[v] != -1) continue;
            const int count = std::popcount(doms[d][v]);
            if (count < best_count) {
                best = v;
                best_count = count;
                if (count <= 1) break;
            }
        }
        chosen[d] = best;
        remaining[d] = doms[d][best];
    };
    pick(0);

    while (true) {
        if (remaining[depth] == 0) {
            // exhausted this vertex: backtrack
            if (depth == 0) return std::nullopt;
            --depth;
            assignment[chosen[depth]] = -1;
            continue;
        }
        const int v = chosen[depth];
        const int t = std::countr_zero(remaining[depth]);
        remaining[depth] &= remaining[depth] - 1;

        auto& next = doms[depth + 1];
        next = doms[depth];
        next[v] = Mask{1} << t;
        bool dead = false;
        for (int u = 0; u < n && !dead; ++u) {
            if (u == v || assignment[u] != -1) continue;
            const unsigned char code = p.rel[static_cast<size_t>(v) * n + u];
            if (code == 0 && !p.prune_unrelated) continue;
            next[u] &= p.allowed[code][t];
            if (!next[u]) dead = true;
        }
        if (dead) continue;

        assignment[v] = t;
        if (depth + 1 == n) return assignment;
        ++depth;
        pick(depth);
    }
}

Mask full_mask(int m) { return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1; }

std::vector<Mask> domains_from_lists(int n, int m, const std::optional<Lists>& lists,
                                     const char* what) {
    std::vector<Mask> dom(n, full_mask(m));
    if (!lists) return dom;
    if (static_cast<int>(lists->size()) != n)
        throw BadListsError(std::string(what) + ": one list per vertex required");
    for (int v = 0; v < n; ++v) {
        Mask d = 0;
        for (int t : (*lists)[v]) {
            if (t < 0 || t >= m)
                throw BadListsError(std::string(what) + ": list entry " + std::to_string(t) +
                                    " out of range");
            d |= Mask{1} << t;
        }
        dom[v] = d;
    }
    return dom;
}

unsigned char rel_code(const Digraph& g, int v, int u) {
    return static_cast<unsigned char>((g.has_arc(v, u) ? 1 : 0) | (g.has_arc(u, v) ? 2 : 0));
}

FcProblem hom_problem(const Digraph& g, const Digraph& h, const std::optional<Lists>& lists,
                      const char* what) {
    if (h.n() > 64) throw TooLargeError(std::string(what) + " target capped at 64 vertices");
    const int n = g.n(), m = h.n();

    FcProblem p;
    p.n = n;
    p.m = m;
    p.dom = domains_from_lists(n, m, lists, what);
    p.rel.resize(static_cast<size_t>(n) * n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v) p.rel[static_cast<size_t>(v) * n + u] = rel_code(g, v, u);
    for (int code = 0; code < 4; ++code) p.allowed[code].assign(m, 0);
    for (int t = 0; t < m; ++t)
        for (int j = 0; j < m; ++j) {
            const bool fwd = h.has_arc(t, j), bwd = h.has_arc(j, t);
            for (int code = 0; code < 4; ++code) {
                if ((code & 1) && !fwd) continue;  // need arc v->u
                if ((code & 2) && !bwd) continue;  // need arc u->v
                p.allowed[code][t] |= Mask{1} << j;
            }
        }
    p.prune_unrelated = false;
    return p;
}

}  // namespace

std::optional<Certificate> find_hom(const Digraph& g, const Digraph& h,
                                    const std::optional<Lists>& lists) {
    auto got = fc_solve(hom_problem(g, h, lists, "find_hom"));
    if (!got) return std::nullopt;
    return Certificate{CertKind::Homomorphism, std::move(*got)};
}

std::vector<Certificate> all_homs(const Digraph& g, const Digraph& h, std::size_t cap) {
    const FcProblem p = hom_problem(g, h, std::nullopt, "all_homs");
    const int n = p.n;
    std::vector<Certificate> out;
    if (n == 0) {
        out.push_back(Certificate{CertKind::Homomorphism, {}});
        return out;
    }
    std::vector<int> assignment(n, -1);
    auto rec = [&](auto&& self, int v, const std::vector<Mask>& dom) -> void {
        for (Mask rem = dom[v]; rem; rem &= rem - 1) {
            const int t = std::countr_zero(rem);
            assignment[v] = t;
            if (v + 1 == n) {
                if (out.size() >= cap) throw TooLargeError("all_homs hit its solution cap");
                out.push_back(Certificate{CertKind::Homomorphism, assignment});
                continue;
            }
            std::vector<Mask> next = dom;
            next[v] = Mask{1} << t;
            bool dead = false;
            for (int u = v + 1; u < n && !dead; ++u) {
                const unsigned char code = p.rel[static_cast<size_t>(v) * n + u];
                if (code == 0) continue;
                next[u] &= p.allowed[code][t];
                if (!next[u]) dead = true;
            }
            if (!dead) self(self, v + 1, next);
        }
        assignment[v] = -1;
    };
    rec(rec, 0, p.dom);
    return out;
}

std::optional<Certificate> find_retraction(const Digraph& g, const std::vector<int>& sub,
                                           const Digraph& h) {
    if (static_cast<int>(sub.size()) != h.n())
        throw NotEmbeddedError("embedding must place every target vertex");
    std::vector<char> hit(g.n(), 0);
    for (int i = 0; i < h.n(); ++i) {
        const int img = sub[i];
        if (img < 0 || img >= g.n()) throw NotEmbeddedError("embedding image out of range");
        if (hit[img]) throw NotEmbeddedError("embedding is not injective");
        hit[img] = 1;
    }
    for (auto [u, v] : h.arcs())
        if (!g.has_arc(sub[u], sub[v]))
            throw NotEmbeddedError("embedding does not preserve an arc");

    Lists lists(g.n());
    std::vector<int> full(h.n());
    for (int i = 0; i < h.n(); ++i) full[i] = i;
    for (int v = 0; v < g.n(); ++v) lists[v] = full;
    for (int i = 0; i < h.n(); ++i) lists[sub[i]] = {i};
    return find_hom(g, h, lists);
}

std::optional<Certificate> find_mpartition(const Digraph& g, const PartitionMatrix& m,
                                           const std::optional<Lists>& fixed) {
    if (m.size() > 64) throw TooLargeError("find_mpartition capped at 64 parts");
    const int n = g.n(), parts = m.size();

    FcProblem p;
    p.n = n;
    p.m = parts;
    p.dom = domains_from_lists(n, parts, fixed, "find_mpartition");
    p.rel.resize(static_cast<size_t>(n) * n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v) p.rel[static_cast<size_t>(v) * n + u] = rel_code(g, v, u);
    auto ok = [](Entry e, bool arc_present) {
        return e == Entry::Star || ((e == Entry::One) == arc_present);
    };
    for (int code = 0; code < 4; ++code) p.allowed[code].assign(parts, 0);
    for (int t = 0; t < parts; ++t)
        for (int j = 0; j < parts; ++j)
            for (int code = 0; code < 4; ++code)
                if (ok(m.at(t, j), code & 1) && ok(m.at(j, t), code & 2))
                    p.allowed[code][t] |= Mask{1} << j;
    p.prune_unrelated = true;

    auto got = fc_solve(p);
    if (!got) return std::nullopt;
    return Certificate{CertKind::Partition, std::move(*got)};
}

std::optional<Certificate> find_acyclic_partition(const Digraph& g, int parts) {
    if (parts < 0) throw RangeError("negative part count");
    const int n = g.n();
    std::vector<int> part(n, -1);

    // After tentatively placing vertex v into pid, check its part (restricted
    // to placed vertices) for a directed cycle.
    std::vector<int> members;
    auto part_has_cycle = [&](int pid, int upto) {
        members.clear();
        for (int u = 0; u <= upto; ++u)
            if (part[u] == pid) members.push_back(u);
        const int k = static_cast<int>(members.size());
        std::vector<int> state(k, 0);  // 0 new, 1 active, 2 done
        std::vector<std::pair<int, int>> frame;
        for (int s = 0; s < k; ++s) {
            if (state[s]) continue;
            state[s] = 1;
            frame.emplace_back(s, 0);
            while (!frame.empty()) {
                auto [i, j] = frame.back();
                if (j < k) {
                    frame.back().second = j + 1;
                    if (!g.has_arc(members[i], members[j])) continue;
                    if (state[j] == 1) return true;
                    if (state[j] == 0) {
                        state[j] = 1;
                        frame.emplace_back(j, 0);
                    }
                } else {
                    state[i] = 2;
                    frame.pop_back();
                }
            }
        }
        return false;
    };

    // Index-order backtracking; a fresh part index may only be opened as the
    // next unused one, which kills part-relabelling symmetry.
    auto place = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        const int limit = std::min(parts, used + 1);
        for (int pid = 0; pid < limit; ++pid) {
            part[v] = pid;
            if (!part_has_cycle(pid, v) && self(self, v + 1, std::max(used, pid + 1)))
                return true;
        }
        part[v] = -1;
        return false;
    };
    if (!place(place, 0, 0)) return std::nullopt;
    return Certificate{CertKind::Partition, part};
}

bool verify(const Digraph& g, const Digraph& h, const Certificate& cert) {
    if (cert.kind != CertKind::Homomorphism) return false;
    if (static_cast<int>(cert.assignment.size()) != g.n()) return false;
    for (int img : cert.assignment)
        if (img < 0 || img >= h.n()) return false;
    for (auto [u, v] : g.arcs())
        if (!h.has_arc(cert.assignment[u], cert.assignment[v])) return false;
    return true;
}

bool verify(const Digraph& g, const PartitionMatrix& m, const Certificate& cert) {
    if (cert.kind != CertKind::Partition) return false;
    if (static_cast<int>(cert.assignment.size()) != g.n()) return false;
    for (int pid : cert.assignment)
        if (pid < 0 || pid >= m.size()) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            const Entry e = m.at(cert.assignment[u], cert.assignment[v]);
            if (e == Entry::One && !g.has_arc(u, v)) return false;
            if (e == Entry::Zero && g.has_arc(u, v)) return false;
        }
    return true;
}

}  // namespace tdcol
