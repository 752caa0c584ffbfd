#pragma once

#include <vector>

#include "tdcol/digraph.hpp"

namespace tdcol {

// Skeleton-plus-multiplicities form of a transitive digraph: the skeleton is
// acyclic, transitive and digon-free; vertex j of the skeleton stands for a
// strong clique of multiplicity[j] >= 1 vertices.
struct Condensation {
    Digraph skeleton;
    std::vector<int> multiplicity;

    Condensation(Digraph skeleton_, std::vector<int> multiplicity_);
};

// Collapses each strong component to one skeleton vertex (components ordered
// by smallest member; skeleton arc i->j iff every arc from component i to
// component j is present).  Requires a transitive input.
Condensation condense(const Digraph& d);

// Blows each skeleton vertex j up into a strong clique of multiplicity[j]
// vertices, cliques laid out consecutively in skeleton order.
Digraph replicate(const Condensation& c);

// Maximum over chains of the skeleton of the total multiplicity along the
// chain; 0 for the empty skeleton.
int max_weighted_chain(const Condensation& c);

}  // namespace tdcol
