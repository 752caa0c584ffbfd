#pragma once

#include <optional>

#include "tdcol/brute.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/matrix.hpp"

namespace tdcol {

// The fixed four-vertex target with a polynomial colouring problem but
// infinitely many minimal obstructions: vertices a=0, b=1, x=2, y=3; a and b
// form a digon, both dominate the sink x, the source y dominates a and b,
// and x,y are non-adjacent.
Digraph fig2_target();

// Transitive G maps to a symmetric H iff its heaviest condensation chain is
// at most the largest strong clique of H.
bool hom_symmetric_target(const Digraph& g, const Digraph& h);

// Transitive G maps to an asymmetric H iff G is digon-free and its longest
// chain is at most the largest transitive tournament in H.
bool hom_asymmetric_target(const Digraph& g, const Digraph& h);

// Recursive peeling for semi-complete transitive targets: drop one vertex
// from each initial strong component of G of size <= |A| together with one
// vertex of H's unique initial strong component A.
bool hom_semicomplete_transitive(const Digraph& g, const Digraph& h);

// 2-SAT-driven colouring for fig2_target(); returns a verified certificate.
std::optional<Certificate> hom_fig2(const Digraph& g);

// Proper colouring of underlying(G) with at most k colours via chain levels;
// the comparability structure makes the greedy level colouring optimal.
std::optional<Certificate> colour_underlying(const Digraph& g, int k);

// Partition into k independent and l clique parts: parts 0..k-1 independent,
// k..k+l-1 cliques (matching kl_matrix(k, l)).
std::optional<Certificate> kl_colour(const Digraph& g, int k, int l);

struct DichromaticResult {
    int k;
    Certificate partition;
};

// Minimum number of acyclic parts; equals the largest strong clique.
DichromaticResult dichromatic(const Digraph& g);

// M-partition for matrices with an all-ones diagonal: induced subdigraphs on
// m+1 vertices decide the whole digraph.
bool mpartition_ones_diag(const Digraph& g, const PartitionMatrix& m);

}  // namespace tdcol
