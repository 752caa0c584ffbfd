#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "tdcol/twosat.hpp"

using namespace tdcol;

namespace {

bool satisfies(const TwoSatInstance& inst, const std::vector<bool>& assignment) {
    for (const auto& [a, b] : inst.clauses()) {
        const bool va = assignment[a.var] == a.positive;
        const bool vb = assignment[b.var] == b.positive;
        if (!va && !vb) return false;
    }
    return true;
}

// Ground truth by trying all 2^n assignments.
bool satisfiable_exhaustive(const TwoSatInstance& inst) {
    const int n = inst.variable_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> assignment(n);
        for (int v = 0; v < n; ++v) assignment[v] = (mask >> v) & 1;
        if (satisfies(inst, assignment)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("trivial instances") {
    TwoSatInstance empty(0);
    REQUIRE(solve_2sat(empty).has_value());

    TwoSatInstance free_vars(3);
    const auto got = solve_2sat(free_vars);
    REQUIRE(got.has_value());
    CHECK(got->size() == 3);
}

TEST_CASE("unit clauses pin variables and can clash") {
    TwoSatInstance inst(2);
    inst.add_unit({0, true});
    inst.add_unit({1, false});
    const auto got = solve_2sat(inst);
    REQUIRE(got.has_value());
    CHECK((*got)[0] == true);
    CHECK((*got)[1] == false);

    inst.add_unit({0, false});
    CHECK_FALSE(solve_2sat(inst).has_value());
}

TEST_CASE("classic implication chain is satisfiable, contradiction cycle is not") {
    // (x0 or x1) and (not x0 or x1): forces x1
    TwoSatInstance inst(2);
    inst.add_clause({0, true}, {1, true});
    inst.add_clause({0, false}, {1, true});
    const auto got = solve_2sat(inst);
    REQUIRE(got.has_value());
    CHECK((*got)[1] == true);

    // x <-> not x
    TwoSatInstance bad(1);
    bad.add_clause({0, true}, {0, true});
    bad.add_clause({0, false}, {0, false});
    CHECK_FALSE(solve_2sat(bad).has_value());
}

TEST_CASE("random instances agree with exhaustive search and return real models") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 400; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 8);
        const int clauses = static_cast<int>(rng() % 14);
        TwoSatInstance inst(vars);
        for (int c = 0; c < clauses; ++c) {
            const Literal a{static_cast<int>(rng() % vars), (rng() & 1) != 0};
            const Literal b{static_cast<int>(rng() % vars), (rng() & 1) != 0};
            inst.add_clause(a, b);
        }
        const auto got = solve_2sat(inst);
        CHECK(got.has_value() == satisfiable_exhaustive(inst));
        if (got) CHECK(satisfies(inst, *got));
    }
}

TEST_CASE("solver is deterministic") {
    TwoSatInstance inst(4);
    inst.add_clause({0, true}, {1, true});
    inst.add_clause({2, false}, {3, true});
    inst.add_clause({1, false}, {2, true});
    const auto first = solve_2sat(inst);
    const auto second = solve_2sat(inst);
    REQUIRE(first.has_value());
    CHECK(*first == *second);
}
