#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace tdcol {

struct Literal {
    int var;
    bool positive;
};

class TwoSatInstance {
public:
    explicit TwoSatInstance(int variables);

    void add_clause(Literal a, Literal b);
    void add_unit(Literal a);  // stored as (a or a)

    int variable_count() const { return variables_; }
    const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

private:
    int variables_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

// Implication-graph strongly-connected-components decision; deterministic
// assignment on success.
std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance& instance);

}  // namespace tdcol
