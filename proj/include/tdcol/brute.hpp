#pragma once

#include <optional>
#include <vector>

#include "tdcol/digraph.hpp"
#include "tdcol/matrix.hpp"

namespace tdcol {

enum class CertKind { Homomorphism, Partition };

// Assignment of every input vertex to a target vertex (homomorphism) or a
// part index (partition); checkable by verify() without trusting the solver.
struct Certificate {
    CertKind kind = CertKind::Homomorphism;
    std::vector<int> assignment;

    bool operator==(const Certificate&) const = default;
};

// Per-vertex candidate restrictions; lists[v] holds allowed images of v.
using Lists = std::vector<std::vector<int>>;

// Backtracking with forward checking.  Branching is deterministic: the
// unassigned vertex with the fewest remaining candidates is fixed next (ties
// by lowest index), and candidate values are tried in ascending order, so
// certificates are reproducible.  Targets are capped at 64 vertices/parts.
// These are the ground-truth oracles everything else is validated against.
std::optional<Certificate> find_hom(const Digraph& g, const Digraph& h,
                                    const std::optional<Lists>& lists = std::nullopt);

// sub[i] = image of target vertex i inside g; the embedded copy is pinned
// pointwise, all other vertices carry full lists.
std::optional<Certificate> find_retraction(const Digraph& g, const std::vector<int>& sub,
                                           const Digraph& h);

std::optional<Certificate> find_mpartition(const Digraph& g, const PartitionMatrix& m,
                                           const std::optional<Lists>& fixed = std::nullopt);

// Partition of g into at most `parts` classes each inducing an acyclic
// subdigraph; exhaustive, used as the dichromatic-number oracle.
std::optional<Certificate> find_acyclic_partition(const Digraph& g, int parts);

// Every homomorphism g -> h, in lexicographic assignment order.  Throws
// TooLarge when more than `cap` exist; meant for rigidity checks on small
// instances, not for counting at scale.
std::vector<Certificate> all_homs(const Digraph& g, const Digraph& h, std::size_t cap = 100000);

bool verify(const Digraph& g, const Digraph& h, const Certificate& cert);
bool verify(const Digraph& g, const PartitionMatrix& m, const Certificate& cert);

}  // namespace tdcol
