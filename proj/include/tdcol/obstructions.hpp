#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdcol/brute.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/matrix.hpp"

namespace tdcol {

enum class ProblemKind { Hom, MPartition, KlColour, Dichromatic };

// A fixed decision problem over digraphs, used as the predicate when hunting
// minimal obstructions.  solve() is always ground truth (exhaustive search),
// never one of the specialised polynomial algorithms.
class ProblemHandle {
  public:
    static ProblemHandle hom(Digraph target, std::string name = "");
    static ProblemHandle mpartition(PartitionMatrix m, std::string name = "");
    static ProblemHandle kl(int k, int l);
    static ProblemHandle dichromatic(int k);

    ProblemKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    const Digraph& target() const;          // Hom only
    const PartitionMatrix& matrix() const;  // MPartition only
    int k() const;                          // KlColour / Dichromatic
    int l() const;                          // KlColour

    std::optional<Certificate> solve(const Digraph& g) const;
    bool holds(const Digraph& g) const { return solve(g).has_value(); }

  private:
    ProblemHandle() : target_(0), matrix_(1) {}

    ProblemKind kind_ = ProblemKind::Hom;
    std::string name_;
    Digraph target_;
    PartitionMatrix matrix_;
    int k_ = 0;
    int l_ = 0;
};

// A graph that fails the problem, together with one certificate per vertex
// showing that each one-vertex-deleted subgraph succeeds.  witnesses[v]
// certifies delete_vertex(graph, v).
struct ObstructionItem {
    Digraph graph;
    std::vector<Certificate> witnesses;
};

struct ObstructionCatalogue {
    std::string problem;
    int n_max = 0;
    std::vector<ObstructionItem> items;
};

// True iff g fails p but every one-vertex-deleted subgraph satisfies it.
// g must be transitive.
bool is_minimal_obstruction(const Digraph& g, const ProblemHandle& p);

// All minimal obstructions among transitive digraphs on <= n_max vertices,
// one per isomorphism class, sorted by (size, canonical form).
ObstructionCatalogue find_obstructions(const ProblemHandle& p, int n_max);

// Empirical probe of the "(k+1)(l+1) vertices" question for minimal
// (k,l)-colouring obstructions.  Never proves anything: the verdict is either
// "consistent" or "counterexample found" within the scanned range.
struct KlBoundReport {
    int k = 0;
    int l = 0;
    int n_max = 0;
    int bound = 0;          // (k+1)*(l+1)
    int max_size = 0;       // largest obstruction found; 0 when none
    std::vector<int> sizes; // all obstruction sizes, ascending
    bool counterexample = false;

    std::string verdict() const {
        return counterexample ? "counterexample found" : "consistent";
    }
};

KlBoundReport check_kl_bound(int k, int l, int n_max);

}  // namespace tdcol
