#pragma once

#include <utility>
#include <vector>

namespace tdcol {

// Loop-free digraph on vertices 0..n-1.  A pair of opposite arcs (a digon) is
// allowed; loops are not.  Arcs behave as a set: adding twice is a no-op.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
    void add_arc(int u, int v);

    // All arcs in lexicographic order.
    std::vector<std::pair<int, int>> arcs() const;
    std::vector<int> out_neighbours(int u) const;
    std::vector<int> in_neighbours(int u) const;
    int out_degree(int u) const;
    int in_degree(int u) const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    int arc_count_ = 0;
    std::vector<char> adj_;
};

struct TargetFlags {
    bool symmetric;     // every arc lies in a digon
    bool asymmetric;    // no digon at all
    bool semicomplete;  // every pair of distinct vertices joined by >= 1 arc
    bool transitive;
};

// u->v and v->w imply u->w for distinct u, v, w.
bool is_transitive(const Digraph& d);

// Adds u->w whenever w is reachable from u by a nonempty directed path,
// u != w.  Never introduces loops, even through directed cycles.
Digraph transitive_closure(const Digraph& d);

// Strong components; each sorted ascending, components ordered by smallest
// member.  In a transitive digraph every component is a strong clique.
std::vector<std::vector<int>> strong_components(const Digraph& d);

// Symmetric closure: arc each way wherever at least one direction is present.
Digraph underlying(const Digraph& d);

TargetFlags classify_target(const Digraph& d);

// Subgraph induced on the given vertices (sorted, distinct); vertex i of the
// result is vertices[i].
Digraph induced_subgraph(const Digraph& d, const std::vector<int>& vertices);

// Induced subgraph on all vertices except v; indices above v shift down.
Digraph delete_vertex(const Digraph& d, int v);

Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Acyclic tournament 0 -> 1 -> ... -> k-1 (transitively closed).
Digraph transitive_tournament(int k);

// Complete digraph on k vertices: all arcs both ways.
Digraph strong_clique(int k);

}  // namespace tdcol
