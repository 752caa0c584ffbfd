#pragma once

#include <vector>

#include "tdcol/digraph.hpp"

namespace tdcol {

inline constexpr int kMaxEnumerationVertices = 8;

// One representative per isomorphism class of transitive digraphs on exactly
// n vertices, in a fixed deterministic order.  Generated as replications of
// strict posets (enumerated with ancestor-closed in-sets over a topological
// labelling) and deduplicated by canonical form; results are cached.
const std::vector<Digraph>& enumerate_transitive(int n);

}  // namespace tdcol
