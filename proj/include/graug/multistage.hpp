#pragma once

#include <string>
#include <vector>

#include "graug/core.hpp"
#include "graug/twostage.hpp"

namespace graug::multistage {

// rectangular band of the constraint matrix; the blocks form a tree by
// row-interval nesting, columns partition the variable range
struct TreeBlock {
    IntMatrix mat;
    int parent = -1;  // -1 marks the root
    int row_lo = 0, row_hi = 0;
    int col_lo = 0, col_hi = 0;

    int nrows() const { return row_hi - row_lo; }
    int ncols() const { return col_hi - col_lo; }

    bool operator==(const TreeBlock&) const = default;
};

struct TreeInstance {
    int nrows = 0, ncols = 0;
    std::vector<TreeBlock> blocks;
    IntVec rhs;        // nrows
    IntVec lower;      // ncols
    IntVec upper;      // ncols
    IntVec objective;  // ncols

    Int delta() const;

    bool operator==(const TreeInstance&) const = default;
};

// empty result means the shape is well formed: one root covering all rows,
// row intervals nested or disjoint with parent the tightest enclosure,
// column intervals disjoint and covering, equal column counts per depth
std::vector<std::string> validate_shape(const TreeInstance& t);

IntMatrix assemble(const TreeInstance& t);

IntVec residual(const TreeInstance& t, const IntVec& x);

// depth-1 tree: stacked first-stage band as root, one leaf per block
TreeInstance from_twostage(const TwoStageInstance& inst);

// norm bound tower: starts at (delta*r)^r, then one step 2^(g^(s_i^2)) per
// listed level width
BigInt tower_bound(const std::vector<int>& level_widths, int r, Int delta,
                   long digit_budget_bits = 1 << 20);

twostage::SolveReport solve(const TreeInstance& t, const twostage::SolverConfig& cfg = {});

}  // namespace graug::multistage
