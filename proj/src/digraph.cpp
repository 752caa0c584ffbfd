#include "tdcol/digraph.hpp"

#include <algorithm>
#include <string>

#include "tdcol/errors.hpp"

namespace tdcol {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw RangeError("negative vertex count");
    adj_.assign(static_cast<size_t>(n) * n, 0);
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
    for (auto [u, v] : arcs) add_arc(u, v);
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw RangeError("arc endpoint " + std::to_string(u < 0 || u >= n_ ? u : v) +
                         " out of range for " + std::to_string(n_) + " vertices");
    if (u == v) throw RangeError("loop at vertex " + std::to_string(u));
    char& cell = adj_[static_cast<size_t>(u) * n_ + v];
    if (!cell) {
        cell = 1;
        ++arc_count_;
    }
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Digraph::out_neighbours(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (has_arc(u, v)) out.push_back(v);
    return out;
}

std::vector<int> Digraph::in_neighbours(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (has_arc(v, u)) out.push_back(v);
    return out;
}

int Digraph::out_degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += has_arc(u, v);
    return d;
}

int Digraph::in_degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += has_arc(v, u);
    return d;
}

bool is_transitive(const Digraph& d) {
    const int n = d.n();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || !d.has_arc(u, v)) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (d.has_arc(v, w) && !d.has_arc(u, w)) return false;
            }
        }
    return true;
}

Digraph transitive_closure(const Digraph& d) {
    const int n = d.n();
    Digraph out(n);
    std::vector<char> seen;
    std::vector<int> stack;
    for (int u = 0; u < n; ++u) {
        seen.assign(n, 0);
        stack.clear();
        for (int v = 0; v < n; ++v)
            if (d.has_arc(u, v) && !seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (d.has_arc(v, w) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        for (int w = 0; w < n; ++w)
            if (seen[w] && w != u) out.add_arc(u, w);
    }
    return out;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    // Kosaraju: finish order on d, then sweep the transpose.
    const int n = d.n();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    // iterative DFS computing finish order
    std::vector<std::pair<int, int>> frame;  // (vertex, next neighbour index)
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        frame.emplace_back(s, 0);
        while (!frame.empty()) {
            auto [v, i] = frame.back();
            if (i < n) {
                frame.back().second = i + 1;
                if (d.has_arc(v, i) && !seen[i]) {
                    seen[i] = 1;
                    frame.emplace_back(i, 0);
                }
            } else {
                order.push_back(v);
                frame.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    int comps = 0;
    std::vector<int> stack;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != -1) continue;
        comp[*it] = comps;
        stack.push_back(*it);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (d.has_arc(w, v) && comp[w] == -1) {
                    comp[w] = comps;
                    stack.push_back(w);
                }
        }
        ++comps;
    }
    std::vector<std::vector<int>> result(comps);
    for (int v = 0; v < n; ++v) result[comp[v]].push_back(v);
    for (auto& c : result) std::sort(c.begin(), c.end());
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

Digraph underlying(const Digraph& d) {
    Digraph out(d.n());
    for (auto [u, v] : d.arcs()) {
        out.add_arc(u, v);
        out.add_arc(v, u);
    }
    return out;
}

TargetFlags classify_target(const Digraph& d) {
    TargetFlags f{true, true, true, is_transitive(d)};
    const int n = d.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool uv = d.has_arc(u, v), vu = d.has_arc(v, u);
            if (uv && vu) f.asymmetric = false;
            if (uv != vu) f.symmetric = false;
            if (!uv && !vu) f.semicomplete = false;
        }
    return f;
}

Digraph induced_subgraph(const Digraph& d, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    for (int i = 0; i < k; ++i) {
        if (vertices[i] < 0 || vertices[i] >= d.n()) throw RangeError("induced vertex out of range");
        if (i > 0 && vertices[i] <= vertices[i - 1]) throw RangeError("induced vertices not sorted");
    }
    Digraph out(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && d.has_arc(vertices[i], vertices[j])) out.add_arc(i, j);
    return out;
}

Digraph delete_vertex(const Digraph& d, int v) {
    if (v < 0 || v >= d.n()) throw RangeError("deleted vertex out of range");
    std::vector<int> keep;
    keep.reserve(d.n() - 1);
    for (int u = 0; u < d.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(d, keep);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    Digraph out(a.n() + b.n());
    for (auto [u, v] : a.arcs()) out.add_arc(u, v);
    for (auto [u, v] : b.arcs()) out.add_arc(a.n() + u, a.n() + v);
    return out;
}

Digraph transitive_tournament(int k) {
    Digraph out(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) out.add_arc(u, v);
    return out;
}

Digraph strong_clique(int k) {
    Digraph out(k);
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v) out.add_arc(u, v);
    return out;
}

}  // namespace tdcol
