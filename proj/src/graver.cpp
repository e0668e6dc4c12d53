#include "graug/graver.hpp"

#include <algorithm>
#include <stdexcept>

namespace graug::graver {

BigInt norm_bound(int m, Int delta) {
    if (m < 1 || delta < 1) throw std::invalid_argument("norm_bound: m and delta must be positive");
    return big_pow(BigInt(2) * m * delta + 1, (unsigned long)m);
}

std::vector<IntVec> Basis::elements() const {
    std::vector<IntVec> all;
    all.reserve(reps.size() * 2);
    for (const IntVec& g : reps) {
        all.push_back(g);
        IntVec neg(g.size());
        for (size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        all.push_back(std::move(neg));
    }
    std::sort(all.begin(), all.end(), norm_lex_less);
    return all;
}

Int Basis::max_one_norm() const {
    Int m = 0;
    for (const IntVec& g : reps) m = std::max(m, one_norm(g));
    return m;
}

namespace {

// u sign-compatible with g and componentwise no larger in magnitude
bool minorant(const IntVec& u, const IntVec& g) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (u[i] > 0 ? (g[i] < u[i]) : (g[i] > u[i])) return false;
    }
    return true;
}

bool minorant_neg(const IntVec& u, const IntVec& g) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (u[i] > 0 ? (g[i] > -u[i]) : (g[i] < -u[i])) return false;
    }
    return true;
}

struct Enum {
    const IntMatrix& m;
    Int cap;
    const Config& cfg;
    long long nodes = 0;
    IntVec x;
    IntVec partial;            // current row sums
    std::vector<Int> row_max;  // max |entry| in columns j.. per row, flattened
    std::vector<IntVec>& out;

    Enum(const IntMatrix& mat, Int c, const Config& conf, std::vector<IntVec>& o)
        : m(mat), cap(c), cfg(conf), x(mat.cols, 0), partial(mat.rows, 0), out(o) {
        row_max.assign(size_t(m.cols + 1) * m.rows, 0);
        for (int j = m.cols - 1; j >= 0; --j)
            for (int r = 0; r < m.rows; ++r)
                row_max[size_t(j) * m.rows + r] =
                    std::max(row_max[size_t(j + 1) * m.rows + r], abs_val(m.at(r, j)));
    }

    // prune: rows must still be able to return to zero
    bool viable(int j, Int budget) const {
        for (int r = 0; r < m.rows; ++r) {
            Int reach = checked_mul(row_max[size_t(j) * m.rows + r], budget);
            if (abs_val(partial[r]) > reach) return false;
        }
        return true;
    }

    void run(int j, Int budget, bool all_zero) {
        if (++nodes > cfg.max_nodes) throw budget_error("graver enumeration budget exceeded");
        if (j == m.cols) {
            if (!all_zero && is_zero(partial)) {
                if ((long long)out.size() >= cfg.max_points)
                    throw budget_error("graver point budget exceeded");
                out.push_back(x);
            }
            return;
        }
        Int lo = all_zero ? 0 : -budget;  // canonical sign: first nonzero entry positive
        for (Int v = lo; v <= budget; ++v) {
            x[j] = v;
            for (int r = 0; r < m.rows; ++r)
                partial[r] = checked_add(partial[r], checked_mul(m.at(r, j), v));
            Int rem = budget - abs_val(v);
            if (viable(j + 1, rem)) run(j + 1, rem, all_zero && v == 0);
            for (int r = 0; r < m.rows; ++r)
                partial[r] = checked_sub(partial[r], checked_mul(m.at(r, j), v));
        }
        x[j] = 0;
    }
};

}  // namespace

Basis basis(const IntMatrix& m, const BigInt& cap, const Config& cfg) {
    if (m.rows < 1 || m.cols < 1) throw std::invalid_argument("graver basis: empty matrix");
    if (cap < 0) throw std::invalid_argument("graver basis: negative cap");
    if (cap > cfg.max_nodes) throw budget_error("graver cap exceeds enumeration budget");
    Int icap = (Int)cap;

    std::vector<IntVec> points;
    Enum e(m, icap, cfg, points);
    e.run(0, icap, true);
    std::sort(points.begin(), points.end(), norm_lex_less);

    // g splits iff some kernel point u with one-norm <= |g|/2 is a
    // sign-compatible minorant of g (then g-u is the other summand)
    Basis b;
    b.matrix = m;
    b.cap = cap;
    b.complete = cap >= big_pow(BigInt(2) * m.rows * m.max_abs() + 1, (unsigned long)m.rows);
    for (const IntVec& g : points) {
        Int half = one_norm(g) / 2;
        bool splits = false;
        for (const IntVec& u : points) {
            if (one_norm(u) > half) break;  // sorted by norm
            if (minorant(u, g) || minorant_neg(u, g)) {
                splits = true;
                break;
            }
        }
        if (!splits) b.reps.push_back(g);
    }
    return b;
}

Decomposition decompose(const IntMatrix& m, const IntVec& y, const Basis& b) {
    if (b.matrix != m) throw std::invalid_argument("decompose: basis built for another matrix");
    if (int(y.size()) != m.cols) throw std::invalid_argument("decompose: y has wrong length");
    if (!is_zero(matvec(m, y))) throw std::invalid_argument("decompose: y is not a kernel vector");

    Decomposition d;
    IntVec rest = y;
    while (!is_zero(rest)) {
        const IntVec* pick = nullptr;
        IntVec negbuf;
        for (const IntVec& g : b.reps) {
            if (minorant(g, rest)) {
                pick = &g;
                break;
            }
            if (minorant_neg(g, rest)) {
                negbuf.assign(g.size(), 0);
                for (size_t i = 0; i < g.size(); ++i) negbuf[i] = -g[i];
                pick = &negbuf;
                break;
            }
        }
        if (!pick)
            throw std::domain_error("decompose: no sign-compatible element found; basis truncated?");
        Int q = 0;
        for (size_t i = 0; i < pick->size(); ++i) {
            if ((*pick)[i] == 0) continue;
            Int ratio = rest[i] / (*pick)[i];
            q = (q == 0) ? ratio : std::min(q, ratio);
        }
        d.terms.emplace_back(*pick, q);
        rest = vec_sub(rest, vec_scale(q, *pick));
    }
    d.support_within_bound = (Int)d.terms.size() <= 2 * (Int)m.cols;
    return d;
}

}  // namespace graug::graver
