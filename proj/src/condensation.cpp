#include "tdcol/condensation.hpp"

#include <algorithm>
#include <utility>

#include "tdcol/errors.hpp"

namespace tdcol {

Condensation::Condensation(Digraph skeleton_, std::vector<int> multiplicity_)
    : skeleton(std::move(skeleton_)), multiplicity(std::move(multiplicity_)) {
    if (static_cast<int>(multiplicity.size()) != skeleton.n())
        throw RangeError("multiplicity count does not match skeleton size");
    for (int k : multiplicity)
        if (k < 1) throw ZeroMultiplicityError("multiplicities must be >= 1");
    for (auto [u, v] : skeleton.arcs())
        if (skeleton.has_arc(v, u)) throw NotTransitiveError("skeleton contains a digon");
    if (!is_transitive(skeleton)) throw NotTransitiveError("skeleton is not transitive");
}

Condensation condense(const Digraph& d) {
    if (!is_transitive(d)) throw NotTransitiveError("condense requires a transitive digraph");
    auto comps = strong_components(d);
    const int p = static_cast<int>(comps.size());
    Digraph skeleton(p);
    std::vector<int> mult(p);
    for (int i = 0; i < p; ++i) mult[i] = static_cast<int>(comps[i].size());
    auto all_arcs = [&](const std::vector<int>& from, const std::vector<int>& to) {
        for (int u : from)
            for (int v : to)
                if (!d.has_arc(u, v)) return false;
        return true;
    };
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j && all_arcs(comps[i], comps[j])) skeleton.add_arc(i, j);
    return Condensation(std::move(skeleton), std::move(mult));
}

Digraph replicate(const Condensation& c) {
    const int p = c.skeleton.n();
    std::vector<int> offset(p + 1, 0);
    for (int j = 0; j < p; ++j) offset[j + 1] = offset[j] + c.multiplicity[j];
    Digraph out(offset[p]);
    for (int j = 0; j < p; ++j)
        for (int a = offset[j]; a < offset[j + 1]; ++a)
            for (int b = offset[j]; b < offset[j + 1]; ++b)
                if (a != b) out.add_arc(a, b);
    for (auto [i, j] : c.skeleton.arcs())
        for (int a = offset[i]; a < offset[i + 1]; ++a)
            for (int b = offset[j]; b < offset[j + 1]; ++b) out.add_arc(a, b);
    return out;
}

int max_weighted_chain(const Condensation& c) {
    const int p = c.skeleton.n();
    // topological order by repeatedly taking a vertex with no unprocessed
    // predecessor; the skeleton is acyclic by construction
    std::vector<int> indeg(p, 0);
    for (auto [u, v] : c.skeleton.arcs()) ++indeg[v];
    std::vector<int> ready, weight(p, 0);
    for (int j = 0; j < p; ++j)
        if (indeg[j] == 0) ready.push_back(j);
    int best = 0, processed = 0;
    while (!ready.empty()) {
        int j = ready.back();
        ready.pop_back();
        ++processed;
        weight[j] += c.multiplicity[j];
        best = std::max(best, weight[j]);
        for (int w = 0; w < p; ++w)
            if (c.skeleton.has_arc(j, w)) {
                weight[w] = std::max(weight[w], weight[j]);
                if (--indeg[w] == 0) ready.push_back(w);
            }
    }
    if (processed != p) throw NotTransitiveError("skeleton is cyclic");
    return best;
}

}  // namespace tdcol
