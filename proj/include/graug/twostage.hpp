#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graug/blockip.hpp"
#include "graug/core.hpp"

namespace graug::twostage {

enum class Status { optimal, budget_stopped, infeasible };

std::string to_string(Status s);

struct Augmentation {
    IntVec head;  // first-stage part of the applied cycle
    Int lambda = 0;
    Int gain = 0;  // lambda * c^T y, strictly positive
};

struct SolveReport {
    Status status = Status::infeasible;
    IntVec solution;  // empty when infeasible
    Int objective = 0;
    long iterations = 0;
    std::vector<Augmentation> augmentations;
};

enum class CapMode {
    adaptive,  // start at 1, double while a strictly better cycle appears
    exact,     // one-norm cap from the structural bound, clamped to the box
};

struct SolverConfig {
    CapMode cap_mode = CapMode::adaptive;
    std::optional<Int> fixed_cap;  // overrides cap_mode when set
    bool lambda_all = false;       // every multiplier 1..width instead of doubling
    long max_iterations = 100000;
    long long max_heads = 2'000'000;  // candidate heads per sweep
    int parallel_width = 1;
    blockip::Config block_cfg{};
};

// one-norm bound on the first-stage part of any basis element of the
// two-stage matrix family: (r*s*delta)^(r*s*(2*r*delta+1)^(r*s*s))
BigInt norm_bound(int r, int s, Int delta, long digit_budget_bits = 1 << 20);

// feasible point found by the slack phase; nothing when provably infeasible
std::optional<IntVec> initial_solution(const TwoStageInstance& inst, const SolverConfig& cfg = {});

struct CycleResult {
    Cycle cycle;
    Int gain = 0;         // lambda * c^T y
    bool cap_bound = false;  // the one-norm cap excluded at least one head
};

// best augmenting cycle at step length lambda with head one-norm <= cap;
// nothing if no cycle has positive gain
std::optional<CycleResult> best_cycle(const TwoStageInstance& inst, const IntVec& z, Int lambda,
                                      Int cap, const SolverConfig& cfg = {});

SolveReport solve(const TwoStageInstance& inst, const SolverConfig& cfg = {});

}  // namespace graug::twostage
