#pragma once

// Brute-force reference implementations used only by tests. Everything here
// is written from first principles (plain loops over bounded boxes) so the
// library under test and the reference share no code paths.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graug/core.hpp"

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;
using graug::Int;
using graug::IntMatrix;
using graug::IntVec;

inline IntVec naive_matvec(const IntMatrix& m, const IntVec& x) {
    IntVec r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * x[j];
    return r;
}

inline Int naive_dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int naive_one_norm(const IntVec& v) {
    Int s = 0;
    for (Int x : v) s += x < 0 ? -x : x;
    return s;
}

inline bool norm_lex(const IntVec& a, const IntVec& b) {
    Int na = naive_one_norm(a), nb = naive_one_norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

// visit every lattice point of [lower, upper] in ascending lexicographic
// order (last coordinate fastest)
template <typename Fn>
void for_each_box_point(const IntVec& lower, const IntVec& upper, Fn&& fn) {
    size_t n = lower.size();
    for (size_t i = 0; i < n; ++i)
        if (lower[i] > upper[i]) return;
    IntVec x = lower;
    while (true) {
        fn(static_cast<const IntVec&>(x));
        size_t j = n;
        while (j > 0 && x[j - 1] == upper[j - 1]) {
            x[j - 1] = lower[j - 1];
            --j;
        }
        if (j == 0) break;
        ++x[j - 1];
    }
}

struct IpResult {
    bool feasible = false;
    Int value = 0;
    IntVec best;  // lexicographically smallest optimum
};

// full box scan for max objective^T x subject to m x = rhs, lower <= x <= upper
inline IpResult brute_ip(const IntMatrix& m, const IntVec& rhs, const IntVec& lower,
                         const IntVec& upper, const IntVec& objective) {
    IpResult res;
    for_each_box_point(lower, upper, [&](const IntVec& x) {
        if (naive_matvec(m, x) != rhs) return;
        Int v = naive_dot(objective, x);
        if (!res.feasible || v > res.value) {
            res.feasible = true;
            res.value = v;
            res.best = x;
        }
    });
    return res;
}

namespace detail {

struct KernelDfs {
    const IntMatrix& m;
    std::vector<Int> suffix_max;  // max |entry| of columns j.. per row
    IntVec x, partial;
    std::vector<IntVec>& out;

    KernelDfs(const IntMatrix& mat, std::vector<IntVec>& o)
        : m(mat), x(mat.cols, 0), partial(mat.rows, 0), out(o) {
        suffix_max.assign(size_t(m.cols + 1) * m.rows, 0);
        for (int j = m.cols - 1; j >= 0; --j)
            for (int r = 0; r < m.rows; ++r) {
                Int e = m.at(r, j) < 0 ? -m.at(r, j) : m.at(r, j);
                suffix_max[size_t(j) * m.rows + r] =
                    std::max(suffix_max[size_t(j + 1) * m.rows + r], e);
            }
    }

    void flush() {
        for (Int v : x)
            if (v != 0) {
                out.push_back(x);
                return;
            }
    }

    void walk(int j, Int budget) {
        if (j == m.cols - 1) {
            // last coordinate is forced by any row with a nonzero entry there
            int pr = -1;
            for (int r = 0; r < m.rows; ++r)
                if (m.at(r, j) != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) {
                for (int r = 0; r < m.rows; ++r)
                    if (partial[r] != 0) return;
                for (Int v = -budget; v <= budget; ++v) {
                    x[j] = v;
                    flush();
                }
                x[j] = 0;
                return;
            }
            if (partial[pr] % m.at(pr, j) != 0) return;
            Int v = -partial[pr] / m.at(pr, j);
            if (v < -budget || v > budget) return;
            for (int r = 0; r < m.rows; ++r)
                if (partial[r] + m.at(r, j) * v != 0) return;
            x[j] = v;
            flush();
            x[j] = 0;
            return;
        }
        for (Int v = -budget; v <= budget; ++v) {
            x[j] = v;
            for (int r = 0; r < m.rows; ++r) partial[r] += m.at(r, j) * v;
            Int rem = budget - (v < 0 ? -v : v);
            bool ok = true;
            for (int r = 0; r < m.rows && ok; ++r) {
                Int p = partial[r] < 0 ? -partial[r] : partial[r];
                if (p > suffix_max[size_t(j + 1) * m.rows + r] * rem) ok = false;
            }
            if (ok) walk(j + 1, rem);
            for (int r = 0; r < m.rows; ++r) partial[r] -= m.at(r, j) * v;
        }
        x[j] = 0;
    }
};

}  // namespace detail

// every nonzero kernel point with one-norm <= cap, both signs,
// sorted by (one-norm, lex)
inline std::vector<IntVec> kernel_points(const IntMatrix& m, Int cap) {
    std::vector<IntVec> out;
    if (m.cols == 0) return out;
    detail::KernelDfs dfs(m, out);
    dfs.walk(0, cap);
    std::sort(out.begin(), out.end(), norm_lex);
    return out;
}

// u_i has the sign of g_i (or is zero) and |u_i| <= |g_i| everywhere
inline bool sign_minorant(const IntVec& u, const IntVec& g) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0 && (g[i] < u[i])) return false;
        if (u[i] < 0 && (g[i] > u[i])) return false;
    }
    return true;
}

// indecomposable kernel points straight from the definition: g splits iff
// some other kernel point is a sign-compatible minorant of it
inline std::vector<IntVec> brute_graver(const IntMatrix& m, Int cap) {
    std::vector<IntVec> pts = kernel_points(m, cap);
    std::vector<IntVec> basis;
    for (const IntVec& g : pts) {
        Int ng = naive_one_norm(g);
        bool splits = false;
        for (const IntVec& u : pts) {
            if (naive_one_norm(u) >= ng) break;  // a proper minorant is strictly smaller
            if (sign_minorant(u, g)) {
                splits = true;
                break;
            }
        }
        if (!splits) basis.push_back(g);
    }
    return basis;
}

// lcm(2..n) from prime powers: product over primes p <= n of the largest
// p^k <= n
inline BigInt lcm_upto(long n) {
    BigInt r = 1;
    for (long p = 2; p <= n; ++p) {
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        long pk = p;
        while (pk <= n / p) pk *= p;
        r *= pk;
    }
    return r;
}

// dense membership table of an integer cone over the box [0,caps]: a cell is
// a member iff it is zero or some generator steps down to another member
struct ConeTable {
    IntVec caps;
    std::vector<size_t> stride;
    std::vector<char> in;

    explicit ConeTable(const IntVec& c, const std::vector<IntVec>& gens) : caps(c) {
        size_t cells = 1;
        stride.assign(caps.size(), 0);
        for (int i = int(caps.size()) - 1; i >= 0; --i) {
            stride[i] = cells;
            cells *= size_t(caps[i] + 1);
        }
        in.assign(cells, 0);
        in[0] = 1;
        IntVec p(caps.size(), 0);
        for (size_t idx = 1; idx < cells; ++idx) {
            for (int i = int(caps.size()) - 1; i >= 0; --i) {
                if (p[i] < caps[i]) {
                    ++p[i];
                    break;
                }
                p[i] = 0;
            }
            for (const IntVec& g : gens) {
                bool fits = true;
                size_t off = 0;
                for (size_t i = 0; i < p.size(); ++i) {
                    if (p[i] < g[i]) {
                        fits = false;
                        break;
                    }
                    off += size_t(g[i]) * stride[i];
                }
                if (fits && in[idx - off]) {
                    in[idx] = 1;
                    break;
                }
            }
        }
    }

    bool member(const IntVec& p) const {
        size_t idx = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0 || p[i] > caps[i]) return false;
            idx += size_t(p[i]) * stride[i];
        }
        return in[idx] != 0;
    }
};

// all submultiset sums of counts (bounded-knapsack reachability closure)
inline std::set<IntVec> reachable_sums(const std::map<IntVec, Int>& counts, int dim) {
    std::set<IntVec> cur;
    cur.insert(IntVec(dim, 0));
    for (const auto& [v, cnt] : counts) {
        std::set<IntVec> next = cur;
        for (const IntVec& s : cur) {
            IntVec q = s;
            for (Int k = 1; k <= cnt; ++k) {
                for (int i = 0; i < dim; ++i) q[i] += v[i];
                next.insert(q);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace oracles
