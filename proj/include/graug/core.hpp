#pragma once

#include <string>
#include <vector>

#include "graug/ints.hpp"

namespace graug {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    IntVec a;  // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}
    IntMatrix(int r, int c, IntVec entries) : rows(r), cols(c), a(std::move(entries)) {}

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    Int at(int r, int c) const { return a[size_t(r) * cols + c]; }

    Int max_abs() const {
        Int m = 0;
        for (Int x : a)
            if (abs_val(x) > m) m = abs_val(x);
        return m;
    }

    IntVec col(int c) const {
        IntVec v(rows);
        for (int r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }

    bool operator==(const IntMatrix&) const = default;
};

// m * x, exact
IntVec matvec(const IntMatrix& m, const IntVec& x);

// block-structured instance: n copies of A (r x s) stacked in the first
// column band, one B (r x t) per block on the diagonal
struct TwoStageInstance {
    int n = 0, r = 0, s = 0, t = 0;
    std::vector<IntMatrix> a_blocks;
    std::vector<IntMatrix> b_blocks;
    IntVec rhs;        // n*r
    IntVec lower;      // s + n*t
    IntVec upper;      // s + n*t
    IntVec objective;  // s + n*t, signed entries allowed

    int num_vars() const { return s + n * t; }
    int num_rows() const { return n * r; }
    Int delta() const;

    bool operator==(const TwoStageInstance&) const = default;
};

// empty result means the instance is well formed
std::vector<std::string> validate_instance(const TwoStageInstance& inst);

// full constraint matrix: block i occupies rows [i*r,(i+1)*r),
// A^i at columns [0,s), B^i at columns [s+i*t, s+(i+1)*t)
IntMatrix assemble_matrix(const TwoStageInstance& inst);

// (assembled matrix) * x - rhs without materializing the assembled matrix
IntVec residual(const TwoStageInstance& inst, const IntVec& x);

// kernel element of the assembled matrix, split into first-stage head and
// per-block tails
struct Cycle {
    IntVec head;                 // s entries
    std::vector<IntVec> tails;   // n vectors of t entries

    IntVec flat() const {
        IntVec v = head;
        for (const IntVec& t : tails) v.insert(v.end(), t.begin(), t.end());
        return v;
    }

    bool operator==(const Cycle&) const = default;
};

}  // namespace graug
