#pragma once

#include <map>
#include <vector>

#include "graug/core.hpp"

namespace graug::equalsum {

// multiset of nonnegative integer vectors with positive multiplicities
struct VectorMultiset {
    int dim = 0;
    std::map<IntVec, Int> counts;

    IntVec sum() const {
        IntVec s(dim, 0);
        for (const auto& [v, c] : counts)
            for (int i = 0; i < dim; ++i) s[i] = checked_add(s[i], checked_mul(c, v[i]));
        return s;
    }

    Int cardinality() const {
        Int c = 0;
        for (const auto& [v, k] : counts) c = checked_add(c, k);
        return c;
    }

    bool operator==(const VectorMultiset&) const = default;
};

struct Config {
    long long max_box_cells = 50'000'000;
};

// Given multisets of nonnegative vectors (entries <= delta) with equal totals,
// pick a nonempty submultiset of each so that all chosen submultisets have the
// same sum. The common sum is the (one-norm, lex)-smallest nonzero vector
// reachable in every set; ties inside each set are resolved deterministically.
std::vector<VectorMultiset> common_submultisets(const std::vector<VectorMultiset>& sets, Int delta,
                                                const Config& cfg = {});

// upper bound on the submultiset cardinality needed in dimension d with
// entries <= delta: d^2*delta*lbar*(16*delta*(d+1)+1)^(d*(lbar-1)) where
// lbar = ((2*delta+1)^d)^d
BigInt size_bound(int d, Int delta, long digit_budget_bits = 1 << 20);

}  // namespace graug::equalsum
