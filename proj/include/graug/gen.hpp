#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graug/cones.hpp"
#include "graug/core.hpp"
#include "graug/equalsum.hpp"
#include "graug/multistage.hpp"

namespace graug::gen {

// mt19937_64 with rejection sampling, so streams are identical on every
// platform for a given seed
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    Int uniform(Int lo, Int hi);  // inclusive range
};

struct TwoStageParams {
    int n = 2, r = 1, s = 1, t = 1;
    Int delta = 1;
    Int width = 2;  // box edge length
};

// feasible by construction: the right hand side comes from a sampled point
TwoStageInstance twostage_instance(std::uint64_t seed, const TwoStageParams& p);

struct TreeParams {
    std::vector<int> fanout = {2};  // children per node at each internal depth
    std::vector<int> widths = {1, 1};  // columns per block at each depth
    int leaf_rows = 1;
    Int delta = 1;
    Int width = 2;
};

multistage::TreeInstance tree_instance(std::uint64_t seed, const TreeParams& p);

// vectors with entries in [-delta, delta] and zero total, at most max_count
// of them; the tail cancels whatever the random part accumulated
std::vector<IntVec> zero_sum_family(std::uint64_t seed, int d, Int delta, int max_count);

// entries uniform in [-delta, delta]; with independent_rows the two-row case
// rerolls proportional rows
IntMatrix matrix(std::uint64_t seed, int rows, int cols, Int delta, bool independent_rows = false);

cones::GeneratorSet generator_set(std::uint64_t seed, int count, int d, Int delta);

// multisets of nonnegative vectors sharing one total, each with at most
// max_items members
std::vector<equalsum::VectorMultiset> equal_sum_multisets(std::uint64_t seed, int nsets, int d,
                                                          Int delta, int max_items);

}  // namespace graug::gen
