#pragma once

#include <compare>
#include <cstdint>

#include "tdcol/digraph.hpp"

namespace tdcol {

inline constexpr int kCanonicalMaxVertices = 8;

// Isomorphism key: the lexicographically smallest row-major adjacency matrix
// over all relabellings, packed into 64 bits.  Two digraphs on the same
// number of vertices are isomorphic iff their forms compare equal.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm&) const = default;
};

// Exhaustive over vertex permutations, cut down by a degree-refinement
// partition and prefix pruning; requires n <= kCanonicalMaxVertices.
CanonicalForm canonical_form(const Digraph& d);

bool isomorphic(const Digraph& a, const Digraph& b);

}  // namespace tdcol
