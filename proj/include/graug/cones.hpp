#pragma once

#include <optional>
#include <vector>

#include "graug/blockip.hpp"
#include "graug/core.hpp"

namespace graug::cones {

// generators of an integer cone: nonnegative, nonzero, deduplicated,
// sorted by (one-norm, lex)
struct GeneratorSet {
    int dim = 0;
    std::vector<IntVec> gens;

    Int max_entry() const {
        Int m = 0;
        for (const IntVec& g : gens) m = std::max(m, inf_norm(g));
        return m;
    }

    bool operator==(const GeneratorSet&) const = default;
};

GeneratorSet make_generator_set(int dim, std::vector<IntVec> gens);

// drop every generator that is a sum of two nonzero members of the cone
GeneratorSet reduce(const GeneratorSet& g);

struct Config {
    long long max_box_points = 10'000'000;  // candidate box cells
};

// nonnegative multipliers writing point as a combination of the generators,
// or nothing if point is outside the cone; lexicographically smallest witness
std::optional<IntVec> member(const GeneratorSet& g, const IntVec& point,
                             const blockip::Config& cfg = {});

// bounds for elements of the intersection of two cones with entries <= delta:
// some witness multiplier vector has one-norm <= witness, and every
// indecomposable element has max-norm <= element
struct PairBounds {
    BigInt witness;  // (2*d*delta+1)^d
    BigInt element;  // delta*(2*d*delta+1)^d
};
PairBounds pair_bounds(int d, Int delta);

// witness one-norm bound for indecomposable elements of an intersection of
// ell cones: (16*delta*(d+1)+1)^(d*(ell-1))
BigInt multi_witness_bound(int d, Int delta, int ell);

struct Intersection {
    GeneratorSet gens;
    // one multiplier vector per input cone for each generator, same order
    std::vector<std::vector<IntVec>> witnesses;
    BigInt radius;         // box [0,radius]^d that was searched exhaustively
    bool complete = true;  // radius covers every indecomposable element
};

Intersection intersect_two(const GeneratorSet& b1, const GeneratorSet& b2, Int delta,
                           const Config& cfg = {});

Intersection intersect_many(const std::vector<GeneratorSet>& sets, Int delta,
                            const Config& cfg = {});

}  // namespace graug::cones
