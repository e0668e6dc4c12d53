#pragma once

#include <optional>

#include "graug/core.hpp"

namespace graug::blockip {

struct Config {
    long long max_states = 1'000'000;  // live DP states per stage
};

// maximize objective^T x subject to m x = rhs, lower <= x <= upper.
// Returns the lexicographically smallest optimum, or nothing if infeasible.
// Throws budget_error when the live state set outgrows the budget.
std::optional<IntVec> solve_small_ip(const IntMatrix& m, const IntVec& rhs, const IntVec& lower,
                                     const IntVec& upper, const IntVec& objective,
                                     const Config& cfg = {});

// lexicographically smallest feasible point of m x = rhs, lower <= x <= upper
std::optional<IntVec> feasible_point(const IntMatrix& m, const IntVec& rhs, const IntVec& lower,
                                     const IntVec& upper, const Config& cfg = {});

}  // namespace graug::blockip
