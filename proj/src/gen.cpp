#include "graug/gen.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "graug/ints.hpp"

namespace graug::gen {

Int Rng::uniform(Int lo, Int hi) {
    if (lo > hi) throw std::invalid_argument("uniform: empty range");
    std::uint64_t range = (std::uint64_t)hi - (std::uint64_t)lo + 1;
    if (range == 0) return (Int)eng();  // the full 64-bit span
    std::uint64_t limit = (UINT64_MAX / range) * range;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return (Int)((std::uint64_t)lo + x % range);
}

TwoStageInstance twostage_instance(std::uint64_t seed, const TwoStageParams& p) {
    if (p.n < 1 || p.r < 1 || p.s < 1 || p.t < 1 || p.delta < 0 || p.width < 0)
        throw std::invalid_argument("twostage_instance: bad parameters");
    Rng rng(seed);
    TwoStageInstance inst;
    inst.n = p.n;
    inst.r = p.r;
    inst.s = p.s;
    inst.t = p.t;
    for (int i = 0; i < p.n; ++i) {
        IntMatrix a(p.r, p.s);
        for (Int& e : a.a) e = rng.uniform(-p.delta, p.delta);
        inst.a_blocks.push_back(std::move(a));
    }
    for (int i = 0; i < p.n; ++i) {
        IntMatrix b(p.r, p.t);
        for (Int& e : b.a) e = rng.uniform(-p.delta, p.delta);
        inst.b_blocks.push_back(std::move(b));
    }
    int nv = inst.num_vars();
    IntVec xstar((size_t)nv);
    for (int j = 0; j < nv; ++j) {
        Int lo = rng.uniform(-p.width, p.width);
        Int hi = lo + rng.uniform(0, p.width);
        inst.lower.push_back(lo);
        inst.upper.push_back(hi);
        inst.objective.push_back(rng.uniform(-5, 5));
        xstar[(size_t)j] = rng.uniform(lo, hi);
    }
    inst.rhs.assign((size_t)inst.num_rows(), 0);
    inst.rhs = residual(inst, xstar);  // with rhs zeroed this is exactly A*xstar
    return inst;
}

multistage::TreeInstance tree_instance(std::uint64_t seed, const TreeParams& p) {
    if (p.widths.size() != p.fanout.size() + 1)
        throw std::invalid_argument("tree_instance: widths must have one entry per depth");
    for (int f : p.fanout)
        if (f < 1) throw std::invalid_argument("tree_instance: fanout entries must be positive");
    for (int w : p.widths)
        if (w < 1) throw std::invalid_argument("tree_instance: widths must be positive");
    if (p.leaf_rows < 1 || p.delta < 0 || p.width < 0)
        throw std::invalid_argument("tree_instance: bad parameters");

    Rng rng(seed);
    long leaves = 1;
    for (int f : p.fanout) leaves *= f;

    multistage::TreeInstance t;
    t.nrows = (int)(leaves * p.leaf_rows);
    int col_cursor = 0;
    auto build = [&](auto&& self, int depth, int parent, int row_lo, int row_hi) -> void {
        multistage::TreeBlock b;
        b.parent = parent;
        b.row_lo = row_lo;
        b.row_hi = row_hi;
        b.col_lo = col_cursor;
        b.col_hi = col_cursor + p.widths[(size_t)depth];
        col_cursor = b.col_hi;
        b.mat = IntMatrix(row_hi - row_lo, p.widths[(size_t)depth]);
        for (Int& e : b.mat.a) e = rng.uniform(-p.delta, p.delta);
        int me = (int)t.blocks.size();
        t.blocks.push_back(std::move(b));
        if (depth < (int)p.fanout.size()) {
            int f = p.fanout[(size_t)depth];
            int span = (row_hi - row_lo) / f;
            for (int c = 0; c < f; ++c)
                self(self, depth + 1, me, row_lo + c * span, row_lo + (c + 1) * span);
        }
    };
    build(build, 0, -1, 0, t.nrows);
    t.ncols = col_cursor;

    IntVec xstar((size_t)t.ncols);
    for (int j = 0; j < t.ncols; ++j) {
        Int lo = rng.uniform(-p.width, p.width);
        Int hi = lo + rng.uniform(0, p.width);
        t.lower.push_back(lo);
        t.upper.push_back(hi);
        t.objective.push_back(rng.uniform(-5, 5));
        xstar[(size_t)j] = rng.uniform(lo, hi);
    }
    t.rhs.assign((size_t)t.nrows, 0);
    t.rhs = residual(t, xstar);  // with rhs zeroed this is exactly A*xstar
    return t;
}

std::vector<IntVec> zero_sum_family(std::uint64_t seed, int d, Int delta, int max_count) {
    if (d < 1 || delta < 1 || max_count < 2)
        throw std::invalid_argument("zero_sum_family: bad parameters");
    Rng rng(seed);
    int m = (int)rng.uniform(1, max_count / 2);
    std::vector<IntVec> vs;
    IntVec sum((size_t)d, 0);
    for (int i = 0; i < m; ++i) {
        IntVec v((size_t)d);
        for (int j = 0; j < d; ++j) {
            v[(size_t)j] = rng.uniform(-delta, delta);
            sum[(size_t)j] = checked_add(sum[(size_t)j], v[(size_t)j]);
        }
        vs.push_back(std::move(v));
    }
    while (!is_zero(sum)) {
        IntVec v((size_t)d);
        for (int j = 0; j < d; ++j) {
            v[(size_t)j] = std::clamp(checked_neg(sum[(size_t)j]), checked_neg(delta), delta);
            sum[(size_t)j] = checked_add(sum[(size_t)j], v[(size_t)j]);
        }
        vs.push_back(std::move(v));
    }
    return vs;
}

namespace {

bool degenerate_rows(const IntMatrix& m) {
    if (m.rows == 1) return is_zero(m.a);
    if (m.rows != 2) return false;
    for (int i = 0; i < m.cols; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (checked_mul(m.at(0, i), m.at(1, j)) != checked_mul(m.at(0, j), m.at(1, i)))
                return false;
    return true;  // proportional rows, a zero row included
}

}  // namespace

IntMatrix matrix(std::uint64_t seed, int rows, int cols, Int delta, bool independent_rows) {
    if (rows < 1 || cols < 1 || delta < 0) throw std::invalid_argument("matrix: bad parameters");
    if (independent_rows && (delta < 1 || (rows == 2 && cols < 2)))
        throw std::invalid_argument("matrix: independent rows are impossible at this size");
    Rng rng(seed);
    for (int tries = 0; tries < 10000; ++tries) {
        IntMatrix m(rows, cols);
        for (Int& e : m.a) e = rng.uniform(-delta, delta);
        if (!independent_rows || rows > 2 || !degenerate_rows(m)) return m;
    }
    throw std::runtime_error("matrix: could not sample independent rows");
}

cones::GeneratorSet generator_set(std::uint64_t seed, int count, int d, Int delta) {
    if (count < 1 || d < 1 || delta < 1)
        throw std::invalid_argument("generator_set: bad parameters");
    Rng rng(seed);
    std::vector<IntVec> gens;
    for (int i = 0; i < count; ++i) {
        IntVec v((size_t)d);
        do {
            for (int j = 0; j < d; ++j) v[(size_t)j] = rng.uniform(0, delta);
        } while (is_zero(v));
        gens.push_back(v);
    }
    return cones::make_generator_set(d, std::move(gens));
}

std::vector<equalsum::VectorMultiset> equal_sum_multisets(std::uint64_t seed, int nsets, int d,
                                                          Int delta, int max_items) {
    if (nsets < 1 || d < 1 || delta < 1 || max_items < 2)
        throw std::invalid_argument("equal_sum_multisets: bad parameters");
    Rng rng(seed);
    Int span = max_items / 2;
    IntVec total((size_t)d);
    for (int j = 0; j < d; ++j) total[(size_t)j] = rng.uniform(0, span);

    std::vector<equalsum::VectorMultiset> sets;
    for (int si = 0; si < nsets; ++si) {
        equalsum::VectorMultiset ms;
        ms.dim = d;
        IntVec rem = total;
        while (!is_zero(rem)) {
            IntVec v((size_t)d, 0);
            for (int j = 0; j < d; ++j)
                if (rem[(size_t)j] > 0) v[(size_t)j] = rng.uniform(1, std::min(rem[(size_t)j], delta));
            for (int j = 0; j < d; ++j) rem[(size_t)j] -= v[(size_t)j];
            ms.counts[v] += 1;
        }
        if (ms.counts.empty()) ms.counts[IntVec((size_t)d, 0)] = 1;
        sets.push_back(std::move(ms));
    }
    return sets;
}

}  // namespace graug::gen
