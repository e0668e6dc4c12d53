#pragma once

#include <utility>
#include <vector>

#include "graug/core.hpp"

namespace graug::graver {

struct Config {
    long long max_nodes = 50'000'000;   // DFS nodes visited during enumeration
    long long max_points = 2'000'000;   // kernel points retained
};

// one-norm bound (2*m*delta+1)^m satisfied by every basis element of an
// m-row matrix with entries bounded by delta
BigInt norm_bound(int m, Int delta);

// indecomposable kernel vectors; one representative per +-pair is stored,
// canonical sign has the first nonzero entry positive
struct Basis {
    IntMatrix matrix;
    std::vector<IntVec> reps;  // sorted by (one-norm, lex)
    BigInt cap;                // enumeration one-norm cap used
    bool complete = false;     // cap >= norm_bound(rows, max entry)

    // both signs, sorted by (one-norm, lex)
    std::vector<IntVec> elements() const;
    Int max_one_norm() const;
};

// enumerate kernel points with one-norm <= cap, then drop every point that
// splits into two sign-compatible nonzero kernel points
Basis basis(const IntMatrix& m, const BigInt& cap, const Config& cfg = {});

struct Decomposition {
    std::vector<std::pair<IntVec, Int>> terms;  // (element, positive multiplicity)
    bool support_within_bound = true;           // distinct elements <= 2*cols
};

// write kernel vector y as a nonnegative combination of basis elements, each
// sign-compatible with y; requires a complete basis to always succeed
Decomposition decompose(const IntMatrix& m, const IntVec& y, const Basis& b);

}  // namespace graug::graver
