#include "tdcol/enumerate.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "tdcol/canonical.hpp"
#include "tdcol/condensation.hpp"
#include "tdcol/errors.hpp"

namespace tdcol {

namespace {

// Strict posets on p labelled points with arcs only from lower to higher
// label (every poset admits such a labelling).  anc[j] is the bitmask of
// strict predecessors of j; in-sets are enumerated per element and must be
// closed under taking predecessors, which keeps the relation transitive.
template <typename Emit>
void posets(int p, Emit&& emit) {
    std::vector<std::uint32_t> anc(p, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == p) {
            emit(anc);
            return;
        }
        const std::uint32_t all = (std::uint32_t{1} << j) - 1;
        for (std::uint32_t s = 0;; ++s) {
            bool closed = true;
            for (int i = 0; i < j && closed; ++i)
                if ((s >> i) & 1) closed = (anc[i] & ~s) == 0;
            if (closed) {
                anc[j] = s;
                self(self, j + 1);
            }
            if (s == all) break;
        }
    };
    rec(rec, 0);
}

std::vector<Digraph> build(int n) {
    std::vector<Digraph> out;
    std::set<std::uint64_t> seen;
    for (int p = 1; p <= n; ++p) {
        posets(p, [&](const std::vector<std::uint32_t>& anc) {
            Digraph skeleton(p);
            for (int j = 0; j < p; ++j)
                for (int i = 0; i < j; ++i)
                    if ((anc[j] >> i) & 1) skeleton.add_arc(i, j);
            // all multiplicity vectors >= 1 summing to n, lexicographic
            std::vector<int> mult(p, 1);
            auto spread = [&](auto&& self, int pos, int left) -> void {
                if (pos == p - 1) {
                    mult[pos] = left;
                    const Digraph candidate = replicate(Condensation(skeleton, mult));
                    if (seen.insert(canonical_form(candidate).bits).second)
                        out.push_back(candidate);
                    return;
                }
                for (int k = 1; k <= left - (p - 1 - pos); ++k) {
                    mult[pos] = k;
                    self(self, pos + 1, left - k);
                }
            };
            spread(spread, 0, n);
        });
    }
    return out;
}

}  // namespace

const std::vector<Digraph>& enumerate_transitive(int n) {
    if (n < 1) throw RangeError("enumeration needs n >= 1");
    if (n > kMaxEnumerationVertices)
        throw TooLargeError("enumeration capped at " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
    static std::mutex lock;
    static std::map<int, std::vector<Digraph>> cache;
    std::scoped_lock guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(n)).first;
    return it->second;
}

}  // namespace tdcol
