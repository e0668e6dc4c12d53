#include "graug/equalsum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace graug::equalsum {

namespace {

struct Box {
    IntVec caps;
    std::vector<size_t> stride;
    size_t cells = 1;

    explicit Box(IntVec c) : caps(std::move(c)), stride(caps.size()) {
        for (int i = int(caps.size()) - 1; i >= 0; --i) {
            stride[i] = cells;
            cells *= size_t(caps[i] + 1);
        }
    }

    size_t index(const IntVec& p) const {
        size_t idx = 0;
        for (size_t i = 0; i < p.size(); ++i) idx += size_t(p[i]) * stride[i];
        return idx;
    }
};

}  // namespace

std::vector<VectorMultiset> common_submultisets(const std::vector<VectorMultiset>& sets, Int delta,
                                                const Config& cfg) {
    if (sets.empty()) throw std::invalid_argument("common_submultisets: no input sets");
    int d = sets[0].dim;
    if (d < 1) throw std::invalid_argument("common_submultisets: dimension must be positive");
    for (const VectorMultiset& t : sets) {
        if (t.dim != d) throw std::invalid_argument("common_submultisets: dimension mismatch");
        if (t.counts.empty()) throw std::invalid_argument("common_submultisets: empty multiset");
        for (const auto& [v, c] : t.counts) {
            if (int(v.size()) != d)
                throw std::invalid_argument("common_submultisets: vector length mismatch");
            if (c < 1) throw std::invalid_argument("common_submultisets: nonpositive multiplicity");
            for (Int x : v) {
                if (x < 0) throw std::invalid_argument("common_submultisets: negative entry");
                if (x > delta) throw std::invalid_argument("common_submultisets: entry exceeds delta");
            }
        }
    }
    IntVec total = sets[0].sum();
    for (const VectorMultiset& t : sets)
        if (t.sum() != total)
            throw std::invalid_argument("common_submultisets: totals differ between multisets");

    // all vectors are nonnegative, so submultiset sums live in [0, total]
    Box box(total);
    if (box.cells > size_t(cfg.max_box_cells))
        throw budget_error("common_submultisets: sum box exceeds budget");

    if (is_zero(total)) {
        // only the zero vector occurs; one copy of it from each set
        std::vector<VectorMultiset> out;
        for (const VectorMultiset& t : sets) {
            VectorMultiset s;
            s.dim = d;
            s.counts[t.counts.begin()->first] = 1;
            out.push_back(std::move(s));
        }
        return out;
    }

    // per set, prefix-reachability tables over the entries in map order
    std::vector<std::vector<std::vector<char>>> prefix(sets.size());
    for (size_t si = 0; si < sets.size(); ++si) {
        const VectorMultiset& t = sets[si];
        prefix[si].reserve(t.counts.size() + 1);
        std::vector<char> cur(box.cells, 0);
        cur[0] = 1;
        prefix[si].push_back(cur);
        for (const auto& [v, cnt] : t.counts) {
            std::vector<char> next(box.cells, 0);
            size_t off = box.index(v);
            bool zero_vec = is_zero(v);
            for (size_t idx = 0; idx < box.cells; ++idx) {
                if (!cur[idx]) continue;
                if (zero_vec) {
                    next[idx] = 1;
                    continue;
                }
                size_t at = idx;
                IntVec p(d);
                {
                    size_t rem = idx;
                    for (int i = 0; i < d; ++i) {
                        p[i] = Int(rem / box.stride[i]);
                        rem %= box.stride[i];
                    }
                }
                for (Int k = 0; k <= cnt; ++k) {
                    next[at] = 1;
                    bool fits = true;
                    for (int i = 0; i < d; ++i)
                        if (p[i] + v[i] > box.caps[i]) {
                            fits = false;
                            break;
                        }
                    if (k == cnt || !fits) break;
                    for (int i = 0; i < d; ++i) p[i] += v[i];
                    at += off;
                }
            }
            cur = next;
            prefix[si].push_back(cur);
        }
    }

    // smallest (one-norm, lex) nonzero point reachable in every set
    IntVec best;
    {
        IntVec suffix(d + 1, 0);
        for (int i = d - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + box.caps[i];
        IntVec p(d, 0);
        bool found = false;
        std::function<void(int, Int)> rec = [&](int i, Int rem) {
            if (found) return;
            if (i == d) {
                size_t idx = box.index(p);
                for (const auto& tabs : prefix)
                    if (!tabs.back()[idx]) return;
                best = p;
                found = true;
                return;
            }
            Int lo = std::max<Int>(0, rem - suffix[i + 1]);
            Int hi = std::min<Int>(box.caps[i], rem);
            for (Int v = lo; v <= hi && !found; ++v) {
                p[i] = v;
                rec(i + 1, rem - v);
            }
            p[i] = 0;
        };
        for (Int norm = 1; norm <= suffix[0] && !found; ++norm) rec(0, norm);
        if (!found)
            throw std::logic_error("common_submultisets: no common nonzero sum");  // unreachable
    }

    // backtrack inside each set: smallest count first, entries in reverse
    std::vector<VectorMultiset> out;
    for (size_t si = 0; si < sets.size(); ++si) {
        const VectorMultiset& t = sets[si];
        VectorMultiset s;
        s.dim = d;
        IntVec rem = best;
        int j = int(t.counts.size());
        for (auto it = t.counts.rbegin(); it != t.counts.rend(); ++it, --j) {
            const IntVec& v = it->first;
            Int cnt = it->second;
            Int used = -1;
            IntVec q = rem;
            for (Int k = 0; k <= cnt; ++k) {
                bool in_box = true;
                for (int i = 0; i < d; ++i)
                    if (q[i] < 0) {
                        in_box = false;
                        break;
                    }
                if (!in_box) break;
                if (prefix[si][j - 1][box.index(q)]) {
                    used = k;
                    break;
                }
                if (is_zero(v)) break;
                for (int i = 0; i < d; ++i) q[i] -= v[i];
            }
            if (used < 0)
                throw std::logic_error("common_submultisets: backtrack failed");  // unreachable
            if (used > 0) s.counts[v] = used;
            for (int i = 0; i < d; ++i) rem[i] -= used * v[i];
        }
        if (!is_zero(rem)) throw std::logic_error("common_submultisets: residue after backtrack");
        out.push_back(std::move(s));
    }
    return out;
}

BigInt size_bound(int d, Int delta, long digit_budget_bits) {
    if (d < 1 || delta < 1) throw std::invalid_argument("size_bound: d and delta must be positive");
    BigInt inner = big_pow(BigInt(2) * delta + 1, (unsigned long)d);
    BigInt lbar = big_pow(inner, (unsigned long)d);
    if (lbar > (1u << 30)) throw size_error("size_bound: exponent exceeds digit budget");
    unsigned long lb = lbar.convert_to<unsigned long>();
    BigInt base = BigInt(16) * delta * (d + 1) + 1;
    double bits = double(d) * double(lb - 1) * std::log2(double(base.convert_to<long long>()));
    if (bits > double(digit_budget_bits)) throw size_error("size_bound: result exceeds digit budget");
    return BigInt(d) * d * delta * lbar * big_pow(base, (unsigned long)d * (lb - 1));
}

}  // namespace graug::equalsum
