#include "graug/multistage.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "graug/blockip.hpp"
#include "graug/ints.hpp"

namespace graug::multistage {

Int TreeInstance::delta() const {
    Int m = 0;
    for (const TreeBlock& b : blocks) m = std::max(m, b.mat.max_abs());
    return m;
}

std::vector<std::string> validate_shape(const TreeInstance& t) {
    std::vector<std::string> errs;
    auto fail = [&](const std::string& m) { errs.push_back(m); };

    if (t.nrows < 1) fail("row count must be positive");
    if (t.ncols < 1) fail("column count must be positive");
    if (t.blocks.empty()) fail("no blocks");
    if ((int)t.rhs.size() != t.nrows) fail("rhs length mismatch");
    if ((int)t.lower.size() != t.ncols) fail("lower bound length mismatch");
    if ((int)t.upper.size() != t.ncols) fail("upper bound length mismatch");
    if ((int)t.objective.size() != t.ncols) fail("objective length mismatch");
    if (!errs.empty()) return errs;
    for (int j = 0; j < t.ncols; ++j)
        if (t.lower[(size_t)j] > t.upper[(size_t)j]) {
            fail("lower bound exceeds upper bound");
            break;
        }

    int K = (int)t.blocks.size();
    for (int i = 0; i < K; ++i) {
        const TreeBlock& b = t.blocks[(size_t)i];
        if (b.row_lo < 0 || b.row_lo >= b.row_hi || b.row_hi > t.nrows)
            fail("block " + std::to_string(i) + ": bad row interval");
        if (b.col_lo < 0 || b.col_lo >= b.col_hi || b.col_hi > t.ncols)
            fail("block " + std::to_string(i) + ": bad column interval");
        if (b.mat.rows != b.nrows() || b.mat.cols != b.ncols() ||
            (int)b.mat.a.size() != b.nrows() * b.ncols())
            fail("block " + std::to_string(i) + ": matrix shape mismatch");
    }
    if (!errs.empty()) return errs;

    int root = -1;
    for (int i = 0; i < K; ++i) {
        if (t.blocks[(size_t)i].parent != -1) continue;
        if (root != -1) fail("more than one root block");
        root = i;
    }
    if (root == -1) fail("no root block");
    if (!errs.empty()) return errs;
    if (t.blocks[(size_t)root].row_lo != 0 || t.blocks[(size_t)root].row_hi != t.nrows)
        fail("root block must cover every row");

    for (int i = 0; i < K; ++i) {
        int p = t.blocks[(size_t)i].parent;
        if (p == -1) continue;
        if (p < 0 || p >= K || p == i) {
            fail("block " + std::to_string(i) + ": bad parent index");
            continue;
        }
        const TreeBlock& b = t.blocks[(size_t)i];
        const TreeBlock& pb = t.blocks[(size_t)p];
        if (b.row_lo < pb.row_lo || b.row_hi > pb.row_hi)
            fail("block " + std::to_string(i) + ": rows not inside parent rows");
    }
    if (!errs.empty()) return errs;

    for (int i = 0; i < K; ++i) {
        int at = i, steps = 0;
        while (at != -1 && steps <= K) {
            at = t.blocks[(size_t)at].parent;
            ++steps;
        }
        if (at != -1) {
            fail("parent links form a cycle");
            return errs;
        }
    }

    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            const TreeBlock& a = t.blocks[(size_t)i];
            const TreeBlock& b = t.blocks[(size_t)j];
            bool a_in_b = a.row_lo >= b.row_lo && a.row_hi <= b.row_hi;
            bool b_in_a = b.row_lo >= a.row_lo && b.row_hi <= a.row_hi;
            bool disjoint = a.row_hi <= b.row_lo || b.row_hi <= a.row_lo;
            if (!a_in_b && !b_in_a && !disjoint)
                fail("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                     ": row intervals neither nested nor disjoint");
        }
    if (!errs.empty()) return errs;

    // the parent must be the tightest enclosing block
    for (int i = 0; i < K; ++i) {
        int p = t.blocks[(size_t)i].parent;
        if (p == -1) continue;
        const TreeBlock& b = t.blocks[(size_t)i];
        const TreeBlock& pb = t.blocks[(size_t)p];
        for (int k = 0; k < K; ++k) {
            if (k == i || k == p) continue;
            const TreeBlock& kb = t.blocks[(size_t)k];
            bool covers_i = kb.row_lo <= b.row_lo && kb.row_hi >= b.row_hi;
            bool inside_p = kb.row_lo >= pb.row_lo && kb.row_hi <= pb.row_hi &&
                            (kb.row_lo > pb.row_lo || kb.row_hi < pb.row_hi);
            if (covers_i && inside_p)
                fail("block " + std::to_string(i) + ": parent is not the tightest enclosure");
        }
    }

    std::vector<int> owner((size_t)t.ncols, -1);
    for (int i = 0; i < K; ++i)
        for (int c = t.blocks[(size_t)i].col_lo; c < t.blocks[(size_t)i].col_hi; ++c) {
            if (owner[(size_t)c] != -1)
                fail("column " + std::to_string(c) + " claimed by two blocks");
            owner[(size_t)c] = i;
        }
    for (int c = 0; c < t.ncols; ++c)
        if (owner[(size_t)c] == -1) {
            fail("column " + std::to_string(c) + " not claimed by any block");
            break;
        }

    std::map<int, int> width_at_depth;
    for (int i = 0; i < K; ++i) {
        int depth = 0, at = t.blocks[(size_t)i].parent;
        while (at != -1) {
            ++depth;
            at = t.blocks[(size_t)at].parent;
        }
        auto [it, fresh] = width_at_depth.emplace(depth, t.blocks[(size_t)i].ncols());
        if (!fresh && it->second != t.blocks[(size_t)i].ncols())
            fail("block " + std::to_string(i) + ": column count differs from its depth peers");
    }

    return errs;
}

IntMatrix assemble(const TreeInstance& t) {
    auto errs = validate_shape(t);
    if (!errs.empty()) throw std::invalid_argument(errs.front());
    IntMatrix m(t.nrows, t.ncols);
    for (const TreeBlock& b : t.blocks)
        for (int r = 0; r < b.nrows(); ++r)
            for (int c = 0; c < b.ncols(); ++c) m.at(b.row_lo + r, b.col_lo + c) = b.mat.at(r, c);
    return m;
}

IntVec residual(const TreeInstance& t, const IntVec& x) {
    if ((int)x.size() != t.ncols) throw std::invalid_argument("residual: point size mismatch");
    IntVec res(t.rhs.size());
    for (size_t k = 0; k < res.size(); ++k) res[k] = checked_neg(t.rhs[k]);
    for (const TreeBlock& b : t.blocks)
        for (int r = 0; r < b.nrows(); ++r) {
            Int acc = 0;
            for (int c = 0; c < b.ncols(); ++c)
                acc = checked_add(acc, checked_mul(b.mat.at(r, c), x[(size_t)(b.col_lo + c)]));
            res[(size_t)(b.row_lo + r)] = checked_add(res[(size_t)(b.row_lo + r)], acc);
        }
    return res;
}

TreeInstance from_twostage(const TwoStageInstance& inst) {
    auto errs = validate_instance(inst);
    if (!errs.empty()) throw std::invalid_argument(errs.front());

    TreeInstance t;
    t.nrows = inst.num_rows();
    t.ncols = inst.num_vars();
    t.rhs = inst.rhs;
    t.lower = inst.lower;
    t.upper = inst.upper;
    t.objective = inst.objective;

    TreeBlock root;
    root.mat = IntMatrix(t.nrows, inst.s);
    for (int i = 0; i < inst.n; ++i)
        for (int r = 0; r < inst.r; ++r)
            for (int c = 0; c < inst.s; ++c)
                root.mat.at(i * inst.r + r, c) = inst.a_blocks[(size_t)i].at(r, c);
    root.parent = -1;
    root.row_lo = 0;
    root.row_hi = t.nrows;
    root.col_lo = 0;
    root.col_hi = inst.s;
    t.blocks.push_back(std::move(root));

    for (int i = 0; i < inst.n; ++i) {
        TreeBlock leaf;
        leaf.mat = inst.b_blocks[(size_t)i];
        leaf.parent = 0;
        leaf.row_lo = i * inst.r;
        leaf.row_hi = (i + 1) * inst.r;
        leaf.col_lo = inst.s + i * inst.t;
        leaf.col_hi = inst.s + (i + 1) * inst.t;
        t.blocks.push_back(std::move(leaf));
    }
    return t;
}

BigInt tower_bound(const std::vector<int>& level_widths, int r, Int delta,
                   long digit_budget_bits) {
    if (r < 1 || delta < 0) throw std::invalid_argument("tower_bound: bad parameters");
    for (int s : level_widths)
        if (s < 1) throw std::invalid_argument("tower_bound: level widths must be positive");

    Int d = std::max<Int>(delta, 1);
    BigInt g = big_pow(BigInt(d) * r, (unsigned long)r);
    for (int s : level_widths) {
        unsigned long ss = (unsigned long)s * (unsigned long)s;
        if (g > 1 && BigInt(boost::multiprecision::msb(g)) * ss > 64)
            throw size_error("tower_bound: value does not fit the digit budget");
        BigInt e = big_pow(g, ss);
        if (e > digit_budget_bits)
            throw size_error("tower_bound: value does not fit the digit budget");
        g = big_pow(BigInt(2), e.convert_to<unsigned long>());
    }
    return g;
}

namespace {

// does the tower reach threshold, with clamping instead of materializing
bool tower_at_least(const std::vector<int>& level_widths, int r, Int delta, Int threshold) {
    if (threshold <= 1) return true;
    Int d = std::max<Int>(delta, 1);
    BigInt g = big_pow(BigInt(d) * r, (unsigned long)r);
    for (int s : level_widths) {
        if (g >= threshold) return true;  // each step only grows the value
        BigInt e = big_pow(g, (unsigned long)s * (unsigned long)s);
        if (e >= 64) return true;  // 2^64 exceeds any Int threshold
        g = big_pow(BigInt(2), e.convert_to<unsigned long>());
    }
    return g >= threshold;
}

struct Shape {
    int root = -1;
    std::vector<std::vector<int>> children;
    std::vector<std::vector<int>> excl_rows;  // absolute row indices no child covers
    std::vector<std::vector<int>> subtree;    // block ids below (and incl.) b, by col_lo
    std::vector<int> depth;
};

Shape analyze(const TreeInstance& t) {
    int K = (int)t.blocks.size();
    Shape sh;
    sh.children.resize((size_t)K);
    sh.excl_rows.resize((size_t)K);
    sh.subtree.resize((size_t)K);
    sh.depth.assign((size_t)K, 0);

    for (int i = 0; i < K; ++i) {
        int p = t.blocks[(size_t)i].parent;
        if (p == -1)
            sh.root = i;
        else
            sh.children[(size_t)p].push_back(i);
    }
    for (int i = 0; i < K; ++i) {
        int at = t.blocks[(size_t)i].parent;
        while (at != -1) {
            ++sh.depth[(size_t)i];
            at = t.blocks[(size_t)at].parent;
        }
    }
    for (int i = 0; i < K; ++i) {
        const TreeBlock& b = t.blocks[(size_t)i];
        std::vector<char> covered((size_t)b.nrows(), 0);
        for (int c : sh.children[(size_t)i])
            for (int rr = t.blocks[(size_t)c].row_lo; rr < t.blocks[(size_t)c].row_hi; ++rr)
                covered[(size_t)(rr - b.row_lo)] = 1;
        for (int rr = 0; rr < b.nrows(); ++rr)
            if (!covered[(size_t)rr]) sh.excl_rows[(size_t)i].push_back(b.row_lo + rr);
    }
    // collect subtrees; parents always exist, so repeated passes settle quickly
    for (int i = 0; i < K; ++i) {
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            sh.subtree[(size_t)i].push_back(b);
            for (int c : sh.children[(size_t)b]) stack.push_back(c);
        }
        std::sort(sh.subtree[(size_t)i].begin(), sh.subtree[(size_t)i].end(),
                  [&](int a, int b) { return t.blocks[(size_t)a].col_lo < t.blocks[(size_t)b].col_lo; });
    }
    return sh;
}

using Pick = std::map<int, IntVec>;  // block id -> values of its columns

struct Ctx {
    const TreeInstance& t;
    const Shape& sh;
    IntVec lo, hi;  // per column; already shifted when sweeping for cycles
    const IntVec* obj = nullptr;
    blockip::Config block_cfg;
    long long budget = 0;
    std::map<std::pair<int, IntVec>, std::optional<std::pair<Int, Pick>>> memo;
};

void spend(Ctx& cx) {
    if (--cx.budget < 0) throw budget_error("tree search: node budget exceeded");
}

IntVec flatten(const Ctx& cx, int b, const Pick& p) {
    IntVec out;
    for (int id : cx.sh.subtree[(size_t)b]) {
        const IntVec& v = p.at(id);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::optional<std::pair<Int, Pick>> best_step(Ctx& cx, int b, const IntVec& target);

// evaluate one assignment of block b's own columns against the target
std::optional<std::pair<Int, Pick>> eval_assignment(Ctx& cx, int b, const IntVec& target,
                                                    const IntVec& x) {
    const TreeBlock& blk = cx.t.blocks[(size_t)b];
    IntVec rem = target;
    for (int r = 0; r < blk.nrows(); ++r) {
        Int acc = 0;
        for (int c = 0; c < blk.ncols(); ++c)
            acc = checked_add(acc, checked_mul(blk.mat.at(r, c), x[(size_t)c]));
        rem[(size_t)r] = checked_sub(rem[(size_t)r], acc);
    }
    for (int row : cx.sh.excl_rows[(size_t)b])
        if (rem[(size_t)(row - blk.row_lo)] != 0) return std::nullopt;

    Int value = 0;
    for (int c = 0; c < blk.ncols(); ++c)
        value = checked_add(value, checked_mul((*cx.obj)[(size_t)(blk.col_lo + c)], x[(size_t)c]));
    Pick pick;
    pick[b] = x;
    for (int ch : cx.sh.children[(size_t)b]) {
        const TreeBlock& cb = cx.t.blocks[(size_t)ch];
        IntVec sub((size_t)cb.nrows());
        for (int r = 0; r < cb.nrows(); ++r) sub[(size_t)r] = rem[(size_t)(cb.row_lo - blk.row_lo + r)];
        auto got = best_step(cx, ch, sub);
        if (!got) return std::nullopt;
        value = checked_add(value, got->first);
        for (auto& kv : got->second) pick[kv.first] = kv.second;
    }
    return std::make_pair(value, std::move(pick));
}

std::optional<std::pair<Int, Pick>> best_step(Ctx& cx, int b, const IntVec& target) {
    auto key = std::make_pair(b, target);
    auto hit = cx.memo.find(key);
    if (hit != cx.memo.end()) return hit->second;

    const TreeBlock& blk = cx.t.blocks[(size_t)b];
    std::optional<std::pair<Int, Pick>> best;

    if (cx.sh.children[(size_t)b].empty()) {
        spend(cx);
        IntVec lo(cx.lo.begin() + blk.col_lo, cx.lo.begin() + blk.col_hi);
        IntVec hi(cx.hi.begin() + blk.col_lo, cx.hi.begin() + blk.col_hi);
        IntVec obj(cx.obj->begin() + blk.col_lo, cx.obj->begin() + blk.col_hi);
        auto y = blockip::solve_small_ip(blk.mat, target, lo, hi, obj, cx.block_cfg);
        if (y) {
            Int value = dot(obj, *y);
            Pick pick;
            pick[b] = std::move(*y);
            best = std::make_pair(value, std::move(pick));
        }
        cx.memo[key] = best;
        return best;
    }

    IntVec best_flat;
    IntVec x((size_t)blk.ncols(), 0);
    // odometer over the block's own columns, lexicographically ascending
    auto walk = [&](auto&& self, int c) -> void {
        if (c == blk.ncols()) {
            spend(cx);
            auto got = eval_assignment(cx, b, target, x);
            if (!got) return;
            if (!best || got->first > best->first) {
                best_flat = flatten(cx, b, got->second);
                best = std::move(got);
            } else if (got->first == best->first) {
                IntVec f = flatten(cx, b, got->second);
                if (lex_less(f, best_flat)) {
                    best_flat = std::move(f);
                    best = std::move(got);
                }
            }
            return;
        }
        for (Int v = cx.lo[(size_t)(blk.col_lo + c)]; v <= cx.hi[(size_t)(blk.col_lo + c)]; ++v) {
            x[(size_t)c] = v;
            self(self, c + 1);
        }
    };
    walk(walk, 0);
    cx.memo[key] = best;
    return best;
}

struct RootCand {
    bool valid = false;
    Int lambda = 0;
    Int gain = 0;
    IntVec flat;  // full step vector in column order
};

bool better(const RootCand& a, const RootCand& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return norm_lex_less(a.flat, b.flat);
}

struct SweepResult {
    RootCand best;
    bool cap_bound = false;
};

// best improving cycle at step length lambda with root one-norm <= cap
SweepResult sweep(Ctx& cx, Int lambda, Int cap) {
    SweepResult res;
    int b = cx.sh.root;
    const TreeBlock& blk = cx.t.blocks[(size_t)b];
    IntVec zeros((size_t)blk.nrows(), 0);

    IntVec x((size_t)blk.ncols(), 0);
    auto walk = [&](auto&& self, int c, Int rem) -> void {
        if (c == blk.ncols()) {
            spend(cx);
            auto got = eval_assignment(cx, b, zeros, x);
            if (!got) return;
            Int gain = checked_mul(lambda, got->first);
            if (gain <= 0) return;
            RootCand cand;
            cand.valid = true;
            cand.lambda = lambda;
            cand.gain = gain;
            cand.flat = flatten(cx, b, got->second);
            if (!res.best.valid || better(cand, res.best)) res.best = std::move(cand);
            return;
        }
        Int lo = cx.lo[(size_t)(blk.col_lo + c)];
        Int hi = cx.hi[(size_t)(blk.col_lo + c)];
        if (lo < -rem || hi > rem) res.cap_bound = true;
        lo = std::max(lo, -rem);
        hi = std::min(hi, rem);
        for (Int v = lo; v <= hi; ++v) {
            x[(size_t)c] = v;
            self(self, c + 1, rem - abs_val(v));
        }
    };
    walk(walk, 0, cap);
    return res;
}

Int box_width(const TreeInstance& t) {
    Int w = 0;
    for (int j = 0; j < t.ncols; ++j)
        w = std::max(w, checked_sub(t.upper[(size_t)j], t.lower[(size_t)j]));
    return w;
}

Int root_ceiling(const TreeInstance& t, const Shape& sh) {
    const TreeBlock& blk = t.blocks[(size_t)sh.root];
    Int c = 0;
    for (int j = blk.col_lo; j < blk.col_hi; ++j)
        c = checked_add(c, checked_sub(t.upper[(size_t)j], t.lower[(size_t)j]));
    return c;
}

std::vector<Int> lambda_list(Int width, bool all) {
    std::vector<Int> ls;
    if (width <= 0) return ls;
    if (all) {
        for (Int l = 1; l <= width; ++l) ls.push_back(l);
    } else {
        for (Int l = 1; l <= width; l = checked_mul(l, 2)) ls.push_back(l);
    }
    return ls;
}

Ctx make_cycle_ctx(const TreeInstance& t, const Shape& sh, const IntVec& z, Int lambda,
                   const twostage::SolverConfig& cfg) {
    Ctx cx{t, sh, {}, {}, &t.objective, cfg.block_cfg, cfg.max_heads, {}};
    for (int j = 0; j < t.ncols; ++j) {
        cx.lo.push_back(ceil_div(checked_sub(t.lower[(size_t)j], z[(size_t)j]), lambda));
        cx.hi.push_back(floor_div(checked_sub(t.upper[(size_t)j], z[(size_t)j]), lambda));
    }
    return cx;
}

void apply_step(const TreeInstance& t, IntVec& z, const RootCand& step) {
    Int before = dot(t.objective, z);
    for (int j = 0; j < t.ncols; ++j)
        z[(size_t)j] = checked_add(z[(size_t)j], checked_mul(step.lambda, step.flat[(size_t)j]));
    for (int j = 0; j < t.ncols; ++j)
        if (z[(size_t)j] < t.lower[(size_t)j] || z[(size_t)j] > t.upper[(size_t)j])
            throw std::logic_error("tree augmentation left the box");
    for (Int v : residual(t, z))
        if (v != 0) throw std::logic_error("tree augmentation broke the equations");
    if (step.gain <= 0 || checked_sub(dot(t.objective, z), before) != step.gain)
        throw std::logic_error("tree augmentation gain mismatch");
}

}  // namespace

twostage::SolveReport solve(const TreeInstance& t, const twostage::SolverConfig& cfg) {
    auto errs = validate_shape(t);
    if (!errs.empty()) throw std::invalid_argument(errs.front());
    Shape sh = analyze(t);

    twostage::SolveReport rep;

    // feasibility by direct search: fill every block against the rhs
    IntVec zero_obj((size_t)t.ncols, 0);
    {
        Ctx cx{t, sh, t.lower, t.upper, &zero_obj, cfg.block_cfg, cfg.max_heads, {}};
        std::optional<std::pair<Int, Pick>> found;
        try {
            found = best_step(cx, sh.root, t.rhs);
        } catch (const budget_error&) {
            rep.status = twostage::Status::budget_stopped;
            return rep;
        }
        if (!found) {
            rep.status = twostage::Status::infeasible;
            return rep;
        }
        rep.solution.assign((size_t)t.ncols, 0);
        for (auto& kv : found->second)
            for (int c = 0; c < (int)kv.second.size(); ++c)
                rep.solution[(size_t)(t.blocks[(size_t)kv.first].col_lo + c)] = kv.second[(size_t)c];
        for (Int v : residual(t, rep.solution))
            if (v != 0) throw std::logic_error("tree feasibility search returned a bad point");
    }

    Int width = box_width(t);
    Int ceil_cap = root_ceiling(t, sh);
    auto lambdas = lambda_list(width, cfg.lambda_all);
    if (lambdas.empty()) {
        rep.status = twostage::Status::optimal;
        rep.objective = dot(t.objective, rep.solution);
        return rep;
    }

    std::vector<int> level_widths;
    {
        int maxd = 0;
        for (int d : sh.depth) maxd = std::max(maxd, d);
        level_widths.assign((size_t)maxd, 1);
        for (size_t i = 0; i < t.blocks.size(); ++i)
            if (sh.depth[i] > 0) level_widths[(size_t)(sh.depth[i] - 1)] = t.blocks[i].ncols();
    }
    int leaf_rows = 1;
    for (size_t i = 0; i < t.blocks.size(); ++i)
        if (sh.children[i].empty()) leaf_rows = std::max(leaf_rows, t.blocks[i].nrows());

    bool structural = cfg.cap_mode == twostage::CapMode::exact && !cfg.fixed_cap;
    Int cap;
    if (cfg.fixed_cap) {
        cap = *cfg.fixed_cap;
        if (cap < 0) throw std::invalid_argument("solve: negative head cap");
    } else if (structural) {
        cap = tower_at_least(level_widths, leaf_rows, t.delta(), ceil_cap)
                  ? ceil_cap
                  : tower_bound(level_widths, leaf_rows, t.delta()).convert_to<Int>();
    } else {
        cap = std::min<Int>(1, ceil_cap);
    }

    for (;;) {
        if (rep.iterations >= cfg.max_iterations) {
            rep.status = twostage::Status::budget_stopped;
            break;
        }
        ++rep.iterations;

        RootCand best;
        bool l1_capped = false;
        try {
            for (Int lam : lambdas) {
                Ctx cx = make_cycle_ctx(t, sh, rep.solution, lam, cfg);
                auto sw = sweep(cx, lam, cap);
                if (lam == 1) l1_capped = sw.cap_bound;
                if (sw.best.valid && (!best.valid || better(sw.best, best))) best = std::move(sw.best);
            }
            if (best.valid && cfg.cap_mode == twostage::CapMode::adaptive && !cfg.fixed_cap) {
                while (cap < ceil_cap) {
                    Int next_cap = std::min(checked_mul(std::max<Int>(cap, 1), 2), ceil_cap);
                    RootCand wider;
                    for (Int lam : lambdas) {
                        Ctx cx = make_cycle_ctx(t, sh, rep.solution, lam, cfg);
                        auto sw = sweep(cx, lam, next_cap);
                        if (sw.best.valid && (!wider.valid || better(sw.best, wider)))
                            wider = std::move(sw.best);
                    }
                    if (wider.valid && wider.gain > best.gain) {
                        cap = next_cap;
                        best = std::move(wider);
                    } else {
                        break;
                    }
                }
            }
        } catch (const budget_error&) {
            rep.status = twostage::Status::budget_stopped;
            break;
        }

        if (best.valid) {
            apply_step(t, rep.solution, best);
            const TreeBlock& rb = t.blocks[(size_t)sh.root];
            rep.augmentations.push_back(
                {IntVec(best.flat.begin() + rb.col_lo, best.flat.begin() + rb.col_hi), best.lambda,
                 best.gain});
            continue;
        }

        if (structural || !l1_capped) {
            rep.status = twostage::Status::optimal;
            break;
        }
        if (cfg.fixed_cap) {
            rep.status = twostage::Status::budget_stopped;
            break;
        }
        cap = std::min(checked_mul(std::max<Int>(cap, 1), 2), ceil_cap);
    }

    rep.objective = dot(t.objective, rep.solution);
    return rep;
}

}  // namespace graug::multistage
