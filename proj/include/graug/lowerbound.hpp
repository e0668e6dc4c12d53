#pragma once

#include <vector>

#include "graug/core.hpp"

namespace graug::lowerbound {

// chain family: row i ties the shared first variable to an i+2 multiple,
// so every nonzero kernel point has |x_0| >= lcm(2..delta)
IntMatrix harmonic_matrix(Int delta);

// digit family: one carry block plus one digit row per value
// z in {2 .. delta^(s+1)-1}; every nonzero kernel point has
// |x_0| >= lcm(2 .. delta^(s+1)-1)
IntMatrix encoded_matrix(Int delta, int s);

enum class Family { harmonic, encoded };

struct Certificate {
    BigInt min_coord;              // smallest positive first coordinate
    std::vector<BigInt> witness;   // kernel point attaining it
    long bits = 0;                 // bit length of min_coord
};

Certificate harmonic_certificate(Int delta);
Certificate encoded_certificate(Int delta, int s);

// checks that m is the named family instance, then reports the smallest
// positive first coordinate over its nonzero kernel points
BigInt min_first_coordinate(const IntMatrix& m, Family fam, Int delta, int s = 1);

struct GrowthRow {
    Int delta = 0;
    int s = 0;
    BigInt value;
    long bits = 0;
};

// one row per (delta, s) pair; refuses ranges whose largest encoded value
// would exceed the limit
std::vector<GrowthRow> growth_table(Int delta_lo, Int delta_hi, int s_lo, int s_hi,
                                    long limit = 1000);

}  // namespace graug::lowerbound
