#include "graug/twostage.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "graug/ints.hpp"

namespace graug::twostage {

std::string to_string(Status s) {
    switch (s) {
        case Status::optimal: return "optimal";
        case Status::budget_stopped: return "budget_stopped";
        case Status::infeasible: return "infeasible";
    }
    return "?";
}

BigInt norm_bound(int r, int s, Int delta, long digit_budget_bits) {
    if (r < 1 || s < 1 || delta < 0) throw std::invalid_argument("norm_bound: bad parameters");
    Int d = std::max<Int>(delta, 1);
    BigInt base = BigInt(r) * s * d;
    if (base == 1) return 1;
    BigInt inner = big_pow(BigInt(2) * r * d + 1, (unsigned long)r * (unsigned long)s * (unsigned long)s);
    BigInt expo = BigInt(r) * s * inner;
    BigInt bits_low = expo * boost::multiprecision::msb(base);
    if (bits_low > digit_budget_bits)
        throw size_error("norm_bound: value does not fit the digit budget");
    return big_pow(base, expo.convert_to<unsigned long>());
}

namespace {

// does the structural head bound reach threshold, without materializing it
bool bound_at_least(int r, int s, Int delta, Int threshold) {
    if (threshold <= 1) return true;
    Int d = std::max<Int>(delta, 1);
    BigInt base = BigInt(r) * s * d;
    if (base == 1) return false;
    BigInt inner = big_pow(BigInt(2) * r * d + 1, (unsigned long)r * (unsigned long)s * (unsigned long)s);
    BigInt expo = BigInt(r) * s * inner;
    if (expo > 64) return true;  // base^expo >= 2^65 > any Int
    return big_pow(base, expo.convert_to<unsigned long>()) >= threshold;
}

Int box_width(const TwoStageInstance& inst) {
    Int w = 0;
    for (size_t j = 0; j < inst.lower.size(); ++j)
        w = std::max(w, checked_sub(inst.upper[j], inst.lower[j]));
    return w;
}

// largest one-norm a first-stage step can have while staying inside the box
Int head_ceiling(const TwoStageInstance& inst) {
    Int c = 0;
    for (int j = 0; j < inst.s; ++j)
        c = checked_add(c, checked_sub(inst.upper[j], inst.lower[j]));
    return c;
}

struct Shifted {
    IntVec lo, hi;
};

// per-coordinate step range so that z + lambda*step stays within bounds
Shifted shifted_range(const TwoStageInstance& inst, const IntVec& z, Int lambda, int col_lo,
                      int col_hi) {
    Shifted s;
    for (int j = col_lo; j < col_hi; ++j) {
        s.lo.push_back(ceil_div(checked_sub(inst.lower[j], z[j]), lambda));
        s.hi.push_back(floor_div(checked_sub(inst.upper[j], z[j]), lambda));
    }
    return s;
}

void enum_heads(const Shifted& rng, size_t j, Int rem, IntVec& cur, std::vector<IntVec>& out,
                bool& cap_bound, long long max_heads) {
    if (j == rng.lo.size()) {
        out.push_back(cur);
        if ((long long)out.size() > max_heads)
            throw budget_error("best_cycle: candidate head budget exceeded");
        return;
    }
    Int lo = rng.lo[j];
    Int hi = rng.hi[j];
    if (lo < -rem || hi > rem) cap_bound = true;
    lo = std::max(lo, -rem);
    hi = std::min(hi, rem);
    for (Int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        enum_heads(rng, j + 1, rem - abs_val(v), cur, out, cap_bound, max_heads);
        cur.pop_back();
    }
}

struct Candidate {
    bool valid = false;
    Cycle cycle;
    Int lambda = 0;
    Int gain = 0;
    IntVec flat;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return norm_lex_less(a.flat, b.flat);
}

// best tails for a fixed head; empty when some block has no compatible tail
std::optional<Candidate> eval_head(const TwoStageInstance& inst, const IntVec& z, Int lambda,
                                   const IntVec& head, const SolverConfig& cfg) {
    Candidate c;
    c.cycle.head = head;
    c.lambda = lambda;
    Int unit = 0;
    for (int j = 0; j < inst.s; ++j)
        unit = checked_add(unit, checked_mul(inst.objective[j], head[j]));
    for (int i = 0; i < inst.n; ++i) {
        IntVec target(inst.r, 0);
        for (int row = 0; row < inst.r; ++row) {
            Int acc = 0;
            for (int j = 0; j < inst.s; ++j)
                acc = checked_add(acc, checked_mul(inst.a_blocks[(size_t)i].at(row, j), head[j]));
            target[(size_t)row] = checked_neg(acc);
        }
        int base = inst.s + i * inst.t;
        Shifted rng = shifted_range(inst, z, lambda, base, base + inst.t);
        IntVec obj(inst.objective.begin() + base, inst.objective.begin() + base + inst.t);
        auto y = blockip::solve_small_ip(inst.b_blocks[(size_t)i], target, rng.lo, rng.hi, obj,
                                         cfg.block_cfg);
        if (!y) return std::nullopt;
        for (int j = 0; j < inst.t; ++j)
            unit = checked_add(unit, checked_mul(obj[(size_t)j], (*y)[(size_t)j]));
        c.cycle.tails.push_back(std::move(*y));
    }
    c.gain = checked_mul(lambda, unit);
    c.flat = c.cycle.flat();
    c.valid = true;
    return c;
}

struct SweepResult {
    std::optional<Candidate> best;  // best strictly improving cycle, if any
    bool cap_bound = false;         // the cap excluded at least one in-range head
};

SweepResult sweep(const TwoStageInstance& inst, const IntVec& z, Int lambda, Int cap,
                  const SolverConfig& cfg) {
    SweepResult res;
    Shifted hr = shifted_range(inst, z, lambda, 0, inst.s);
    std::vector<IntVec> heads;
    IntVec cur;
    enum_heads(hr, 0, cap, cur, heads, res.cap_bound, cfg.max_heads);

    int width = std::max(cfg.parallel_width, 1);
    std::vector<Candidate> best_per((size_t)width);
    auto work = [&](int w) {
        Candidate best;
        for (size_t k = (size_t)w; k < heads.size(); k += (size_t)width) {
            auto c = eval_head(inst, z, lambda, heads[k], cfg);
            if (c && c->gain > 0 && (!best.valid || better(*c, best))) best = std::move(*c);
        }
        best_per[(size_t)w] = std::move(best);
    };
    if (width == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs((size_t)width);
        for (int w = 0; w < width; ++w)
            pool.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errs[(size_t)w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    Candidate best;
    for (auto& c : best_per)
        if (c.valid && (!best.valid || better(c, best))) best = std::move(c);
    if (best.valid) res.best = std::move(best);
    return res;
}

void apply_cycle(const TwoStageInstance& inst, IntVec& z, const Candidate& step) {
    Int before = dot(inst.objective, z);
    for (size_t j = 0; j < z.size(); ++j)
        z[j] = checked_add(z[j], checked_mul(step.lambda, step.flat[j]));
    for (size_t j = 0; j < z.size(); ++j)
        if (z[j] < inst.lower[j] || z[j] > inst.upper[j])
            throw std::logic_error("augmentation step left the box");
    for (Int v : residual(inst, z))
        if (v != 0) throw std::logic_error("augmentation step broke the equations");
    if (step.gain <= 0 || checked_sub(dot(inst.objective, z), before) != step.gain)
        throw std::logic_error("augmentation step gain mismatch");
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

// augments z to the top; z must satisfy the equations and bounds
SolveReport run_from(const TwoStageInstance& inst, IntVec z, const SolverConfig& cfg) {
    SolveReport rep;
    rep.solution = std::move(z);

    Int width = box_width(inst);
    Int ceil_cap = head_ceiling(inst);
    auto lambdas = lambda_list(width, cfg.lambda_all);
    if (lambdas.empty()) {  // every variable is fixed
        rep.status = Status::optimal;
        rep.objective = dot(inst.objective, rep.solution);
        return rep;
    }

    bool structural = cfg.cap_mode == CapMode::exact && !cfg.fixed_cap;
    Int cap;
    if (cfg.fixed_cap) {
        cap = *cfg.fixed_cap;
        if (cap < 0) throw std::invalid_argument("solve: negative head cap");
    } else if (structural) {
        cap = bound_at_least(inst.r, inst.s, inst.delta(), ceil_cap)
                  ? ceil_cap
                  : norm_bound(inst.r, inst.s, inst.delta()).convert_to<Int>();
    } else {
        cap = std::min<Int>(1, ceil_cap);
    }

    for (;;) {
        if (rep.iterations >= cfg.max_iterations) {
            rep.status = Status::budget_stopped;
            break;
        }
        ++rep.iterations;

        std::optional<Candidate> best;
        bool l1_capped = false;
        try {
            for (Int lam : lambdas) {
                auto sw = sweep(inst, rep.solution, lam, cap, cfg);
                if (lam == 1) l1_capped = sw.cap_bound;
                if (sw.best && (!best || better(*sw.best, *best))) best = std::move(sw.best);
            }
            if (best && cfg.cap_mode == CapMode::adaptive && !cfg.fixed_cap) {
                // widen the cap while that strictly improves the step
                while (cap < ceil_cap) {
                    Int next_cap = std::min(checked_mul(std::max<Int>(cap, 1), 2), ceil_cap);
                    std::optional<Candidate> wider;
                    for (Int lam : lambdas) {
                        auto sw = sweep(inst, rep.solution, lam, next_cap, cfg);
                        if (sw.best && (!wider || better(*sw.best, *wider))) wider = std::move(sw.best);
                    }
                    if (wider && wider->gain > best->gain) {
                        cap = next_cap;
                        best = std::move(wider);
                    } else {
                        break;
                    }
                }
            }
        } catch (const budget_error&) {
            rep.status = Status::budget_stopped;
            break;
        }

        if (best) {
            apply_cycle(inst, rep.solution, *best);
            rep.augmentations.push_back({best->cycle.head, best->lambda, best->gain});
            continue;
        }

        if (structural || !l1_capped) {
            // nothing improves and no basis element was out of reach
            rep.status = Status::optimal;
            break;
        }
        if (cfg.fixed_cap) {
            rep.status = Status::budget_stopped;
            break;
        }
        cap = std::min(checked_mul(std::max<Int>(cap, 1), 2), ceil_cap);
    }

    rep.objective = dot(inst.objective, rep.solution);
    return rep;
}

// original blocks plus one signed slack column per row; start satisfies the
// equations with the slack part soaking up the residual at the lower corner
TwoStageInstance slack_instance(const TwoStageInstance& inst, const IntVec& rho, IntVec& start) {
    TwoStageInstance aux;
    aux.n = inst.n;
    aux.r = inst.r;
    aux.s = inst.s;
    aux.t = inst.t + inst.r;
    aux.a_blocks = inst.a_blocks;
    aux.rhs = inst.rhs;

    aux.lower.assign(inst.lower.begin(), inst.lower.begin() + inst.s);
    aux.upper.assign(inst.upper.begin(), inst.upper.begin() + inst.s);
    aux.objective.assign((size_t)inst.s, 0);
    start.assign(inst.lower.begin(), inst.lower.begin() + inst.s);

    for (int i = 0; i < inst.n; ++i) {
        IntMatrix bb(inst.r, aux.t);
        for (int row = 0; row < inst.r; ++row)
            for (int col = 0; col < inst.t; ++col)
                bb.at(row, col) = inst.b_blocks[(size_t)i].at(row, col);
        for (int row = 0; row < inst.r; ++row)
            bb.at(row, inst.t + row) = rho[(size_t)(i * inst.r + row)] >= 0 ? 1 : -1;
        aux.b_blocks.push_back(std::move(bb));

        int base = inst.s + i * inst.t;
        for (int col = 0; col < inst.t; ++col) {
            aux.lower.push_back(inst.lower[(size_t)(base + col)]);
            aux.upper.push_back(inst.upper[(size_t)(base + col)]);
            aux.objective.push_back(0);
            start.push_back(inst.lower[(size_t)(base + col)]);
        }
        for (int row = 0; row < inst.r; ++row) {
            Int a = abs_val(rho[(size_t)(i * inst.r + row)]);
            aux.lower.push_back(0);
            aux.upper.push_back(a);
            aux.objective.push_back(-1);
            start.push_back(a);
        }
    }
    return aux;
}

}  // namespace

std::optional<CycleResult> best_cycle(const TwoStageInstance& inst, const IntVec& z, Int lambda,
                                      Int cap, const SolverConfig& cfg) {
    auto errs = validate_instance(inst);
    if (!errs.empty()) throw std::invalid_argument(errs.front());
    if (lambda < 1) throw std::invalid_argument("best_cycle: lambda must be positive");
    if (cap < 0) throw std::invalid_argument("best_cycle: negative head cap");
    if ((int)z.size() != inst.num_vars()) throw std::invalid_argument("best_cycle: point size mismatch");
    for (size_t j = 0; j < z.size(); ++j)
        if (z[j] < inst.lower[j] || z[j] > inst.upper[j])
            throw std::invalid_argument("best_cycle: point outside bounds");
    for (Int v : residual(inst, z))
        if (v != 0) throw std::invalid_argument("best_cycle: point does not satisfy the equations");

    auto sw = sweep(inst, z, lambda, cap, cfg);
    if (!sw.best) return std::nullopt;
    CycleResult res;
    res.cycle = std::move(sw.best->cycle);
    res.gain = sw.best->gain;
    res.cap_bound = sw.cap_bound;
    return res;
}

std::optional<IntVec> initial_solution(const TwoStageInstance& inst, const SolverConfig& cfg) {
    auto errs = validate_instance(inst);
    if (!errs.empty()) throw std::invalid_argument(errs.front());

    IntVec rho = residual(inst, inst.lower);  // A*l - b
    for (Int& v : rho) v = checked_neg(v);    // slack must add b - A*l
    if (std::all_of(rho.begin(), rho.end(), [](Int v) { return v == 0; })) return inst.lower;

    IntVec start;
    TwoStageInstance aux = slack_instance(inst, rho, start);

    SolverConfig pcfg = cfg;
    pcfg.fixed_cap.reset();  // a cap sized for the main run does not transfer
    pcfg.cap_mode = CapMode::adaptive;
    SolveReport rep = run_from(aux, std::move(start), pcfg);
    if (rep.status != Status::optimal)
        throw budget_error("initial_solution: stopped before deciding feasibility");
    if (rep.objective != 0) return std::nullopt;

    IntVec x(rep.solution.begin(), rep.solution.begin() + inst.s);
    for (int i = 0; i < inst.n; ++i) {
        int base = inst.s + i * aux.t;
        x.insert(x.end(), rep.solution.begin() + base, rep.solution.begin() + base + inst.t);
    }
    return x;
}

SolveReport solve(const TwoStageInstance& inst, const SolverConfig& cfg) {
    auto errs = validate_instance(inst);
    if (!errs.empty()) throw std::invalid_argument(errs.front());

    std::optional<IntVec> start;
    try {
        start = initial_solution(inst, cfg);
    } catch (const budget_error&) {
        SolveReport rep;
        rep.status = Status::budget_stopped;
        return rep;
    }
    if (!start) {
        SolveReport rep;
        rep.status = Status::infeasible;
        return rep;
    }
    return run_from(inst, std::move(*start), cfg);
}

}  // namespace graug::twostage
