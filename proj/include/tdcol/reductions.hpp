#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdcol/brute.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/matrix.hpp"

namespace tdcol {

// Bipartite graph with an optional marked copy of a target and optional
// per-vertex lists.  Vertices are side-local: whites 0..whites-1, blacks
// 0..blacks-1.  embed_white[w] names the target white that w represents
// (-1 = none); embed vectors are either empty (no marking) or full-length.
// Lists hold side-local target indices; an empty outer vector means every
// vertex on that side is unrestricted.
struct BipartiteInstance {
    int whites = 0;
    int blacks = 0;
    std::vector<std::pair<int, int>> edges;  // (white, black)
    std::vector<int> embed_white;
    std::vector<int> embed_black;
    std::vector<std::vector<int>> white_lists;
    std::vector<std::vector<int>> black_lists;

    bool has_edge(int w, int b) const;
    bool operator==(const BipartiteInstance&) const = default;
};

// Structural invariants: ranges, no duplicate edges, embed/list shapes.
void validate_bipartite(const BipartiteInstance& b);

// No white vertex's black neighbourhood is contained in another's.
bool domination_free(const BipartiteInstance& h);

// Digraph whose arcs all climb levels, except inside duplicated pairs.
struct LevelledDigraph {
    Digraph digraph{0};
    std::vector<int> level;
};

// A gadget path is n+2 positions long, so targets with large sides blow up
// fast; everything this module builds is meant to stay brute-forceable.
inline constexpr int kMaxGadgetSide = 6;

// Orients the target white->black and hangs level-forcing paths off every
// vertex: the path into the i-th white has its first and (i+1)-st positions
// duplicated, the path out of the i-th black its (i+1)-st and last.  The
// transitive closure of the result is a rigid transitive digraph: its only
// self-homomorphisms swap duplicated pairs.  Whites land on level n+2,
// blacks on level n+3, where n = max side size.
LevelledDigraph build_here_target(const BipartiteInstance& h);

// Same construction applied to an instance g carrying a marked copy of h:
// marked vertices get the doubly-duplicated paths of their target twin,
// unmarked ones a singly-duplicated path (first position for whites, last
// for blacks).  The output maps to build_here_target(h) exactly when g
// retracts to h.
LevelledDigraph transform_here_instance(const BipartiteInstance& g, const BipartiteInstance& h);

struct LabelledMatrix {
    PartitionMatrix matrix{1};
    std::vector<std::string> labels;  // one per part
};

// Partition matrix over parts {whites} + {b.1,b.2,b.3 per black}: STAR at
// (w, b.i) for each edge, ONE at (b.1,b.2) and (b.2,b.1), ZERO elsewhere
// (diagonal included).  Requires domination_free(h).
LabelledMatrix build_csp_matrix(const BipartiteInstance& h);

// Variant with no off-diagonal ONE: parts {whites} + {b.1,b.2 per black},
// STAR at (w, b.i) per edge, ONE only at the diagonal (b.2,b.2).
LabelledMatrix build_loops_matrix(const BipartiteInstance& h);

// Orients g white->black and duplicates each marked black into a digon; the
// result is transitive and is M-partitionable (for the csp/loops matrix of
// h) exactly when g admits the list retraction with marked blacks pinned.
Digraph transform_csp_instance(const BipartiteInstance& g, const BipartiteInstance& h);

// Turing direction for the csp matrix: m must equal build_csp_matrix(h).
// Produces one list-restricted bipartite instance per injective assignment
// of gp's digons to the matrix's strong digons (contracted digons pinned to
// the matching black).  gp is M-partitionable iff at least one instance
// admits a list homomorphism to h.  Inputs whose arcs cannot be oriented
// consistently with a white->black reading (or with a strong component of
// size >= 3) produce no instances.
std::vector<BipartiteInstance> expand_turing(const Digraph& gp, const PartitionMatrix& m,
                                             const BipartiteInstance& h);

// Side-preserving list homomorphism oracle between bipartite instances,
// honouring g's lists.  The certificate assigns g's whites then blacks to
// combined target indices (white i -> i, black j -> h.whites + j).
std::optional<Certificate> bip_list_hom(const BipartiteInstance& g, const BipartiteInstance& h);

// Retraction oracle: every marked vertex of g is pinned to its target twin,
// all other vertices are unrestricted (g's own lists are ignored).
std::optional<Certificate> bip_retraction(const BipartiteInstance& g, const BipartiteInstance& h);

// Same, but only marked blacks are pinned; for domination-free targets this
// matches bip_retraction verdict-wise, and it is the list pattern the
// csp/loops constructions encode.
std::optional<Certificate> bip_black_retraction(const BipartiteInstance& g,
                                                const BipartiteInstance& h);

}  // namespace tdcol
