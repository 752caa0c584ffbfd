#include "tdcol/twosat.hpp"

#include <string>

#include "tdcol/errors.hpp"

namespace tdcol {

TwoSatInstance::TwoSatInstance(int variables) : variables_(variables) {
    if (variables < 0) throw RangeError("negative variable count");
}

void TwoSatInstance::add_clause(Literal a, Literal b) {
    for (Literal l : {a, b})
        if (l.var < 0 || l.var >= variables_)
            throw RangeError("literal variable " + std::to_string(l.var) + " out of range");
    clauses_.emplace_back(a, b);
}

void TwoSatInstance::add_unit(Literal a) { add_clause(a, a); }

namespace {

// literal node: 2*var for positive, 2*var+1 for negated
int node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }
int negation(int nd) { return nd ^ 1; }

}  // namespace

std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance& instance) {
    const int n = 2 * instance.variable_count();
    std::vector<std::vector<int>> succ(n);
    for (auto [a, b] : instance.clauses()) {
        succ[negation(node(a))].push_back(node(b));
        succ[negation(node(b))].push_back(node(a));
    }

    // Tarjan SCC, iterative.
    std::vector<int> comp(n, -1), low(n), num(n, -1), stack;
    std::vector<std::pair<int, size_t>> frame;
    int counter = 0, comps = 0;
    std::vector<char> on_stack(n, 0);
    for (int s = 0; s < n; ++s) {
        if (num[s] != -1) continue;
        frame.emplace_back(s, 0);
        num[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frame.empty()) {
            auto [v, i] = frame.back();
            if (i < succ[v].size()) {
                frame.back().second = i + 1;
                const int w = succ[v][i];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frame.emplace_back(w, 0);
                } else if (on_stack[w] && num[w] < low[v]) {
                    low[v] = num[w];
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                frame.pop_back();
                if (!frame.empty()) {
                    const int parent = frame.back().first;
                    if (low[v] < low[parent]) low[parent] = low[v];
                }
            }
        }
    }

    std::vector<bool> out(instance.variable_count());
    for (int v = 0; v < instance.variable_count(); ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // Tarjan numbers components in reverse topological order, so the
        // later component is the implied value.
        out[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return out;
}

}  // namespace tdcol
