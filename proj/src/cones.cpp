#include "graug/cones.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace graug::cones {

GeneratorSet make_generator_set(int dim, std::vector<IntVec> gens) {
    if (dim < 1) throw std::invalid_argument("generator set: dimension must be positive");
    for (const IntVec& g : gens) {
        if (int(g.size()) != dim) throw std::invalid_argument("generator set: dimension mismatch");
        if (is_zero(g)) throw std::invalid_argument("generator set: zero generator");
        for (Int x : g)
            if (x < 0) throw std::invalid_argument("generator set: negative entry");
    }
    std::sort(gens.begin(), gens.end(), norm_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return GeneratorSet{dim, std::move(gens)};
}

std::optional<IntVec> member(const GeneratorSet& g, const IntVec& point,
                             const blockip::Config& cfg) {
    if (int(point.size()) != g.dim) throw std::invalid_argument("member: dimension mismatch");
    for (Int x : point)
        if (x < 0) return std::nullopt;
    int k = int(g.gens.size());
    IntMatrix m(g.dim, k);
    IntVec lower(k, 0), upper(k, 0);
    for (int j = 0; j < k; ++j) {
        Int cap = -1;
        for (int i = 0; i < g.dim; ++i) {
            m.at(i, j) = g.gens[j][i];
            if (g.gens[j][i] > 0) {
                Int c = point[i] / g.gens[j][i];
                cap = cap < 0 ? c : std::min(cap, c);
            }
        }
        upper[j] = std::max<Int>(cap, 0);
    }
    return blockip::feasible_point(m, point, lower, upper, cfg);
}

PairBounds pair_bounds(int d, Int delta) {
    if (d < 1 || delta < 1) throw std::invalid_argument("pair_bounds: d and delta must be positive");
    BigInt w = big_pow(BigInt(2) * d * delta + 1, (unsigned long)d);
    return PairBounds{w, delta * w};
}

BigInt multi_witness_bound(int d, Int delta, int ell) {
    if (d < 1 || delta < 1 || ell < 1)
        throw std::invalid_argument("multi_witness_bound: parameters must be positive");
    return big_pow(BigInt(16) * delta * (d + 1) + 1, (unsigned long)(d) * (unsigned long)(ell - 1));
}

namespace {

// dense table over the box [0,caps[0]] x ... x [0,caps[d-1]]
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

    bool contains(const IntVec& p) const {
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] < 0 || p[i] > caps[i]) return false;
        return true;
    }

    // visit all cells ordered by (one-norm, lex)
    void for_each_by_norm(const std::function<void(const IntVec&)>& fn) const {
        int d = int(caps.size());
        IntVec suffix(d + 1, 0);  // capacity of coordinates i..
        for (int i = d - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + caps[i];
        IntVec p(d, 0);
        std::function<void(int, Int)> rec = [&](int i, Int rem) {
            if (i == d) {
                fn(p);
                return;
            }
            Int lo = std::max<Int>(0, rem - suffix[i + 1]);
            Int hi = std::min<Int>(caps[i], rem);
            for (Int v = lo; v <= hi; ++v) {
                p[i] = v;
                rec(i + 1, rem - v);
            }
            p[i] = 0;
        };
        for (Int norm = 0; norm <= suffix[0]; ++norm) rec(0, norm);
    }
};

// reachability of every box cell from 0 by adding generators; bp[cell] is
// the last generator on a minimum-step walk (-1 at the origin, -2
// unreachable), so walked witnesses have minimal one-norm
std::vector<int> reach_table(const Box& box, const std::vector<IntVec>& gens) {
    std::vector<int> bp(box.cells, -2);
    std::vector<Int> dist(box.cells, -1);
    bp[0] = -1;
    dist[0] = 0;
    int d = int(box.caps.size());
    std::vector<size_t> offs(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) offs[k] = box.index(gens[k]);
    IntVec p(d, 0);
    for (size_t idx = 1; idx < box.cells; ++idx) {
        // odometer increment keeps p in sync with idx
        for (int i = d - 1; i >= 0; --i) {
            if (p[i] < box.caps[i]) {
                ++p[i];
                break;
            }
            p[i] = 0;
        }
        for (size_t k = 0; k < gens.size(); ++k) {
            bool fits = true;
            for (int i = 0; i < d; ++i)
                if (p[i] < gens[k][i]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            Int prev = dist[idx - offs[k]];
            if (prev < 0) continue;
            if (dist[idx] < 0 || prev + 1 < dist[idx]) {
                dist[idx] = prev + 1;
                bp[idx] = int(k);
            }
        }
    }
    return bp;
}

IntVec walk_witness(const Box& box, const std::vector<int>& bp, const std::vector<IntVec>& gens,
                    const IntVec& point) {
    IntVec counts(gens.size(), 0);
    size_t idx = box.index(point);
    while (bp[idx] >= 0) {
        int k = bp[idx];
        ++counts[k];
        idx -= box.index(gens[k]);
    }
    return counts;
}

struct Scan {
    std::vector<IntVec> kept;
    std::vector<size_t> kept_off;
};

// indecomposable members of the cone described by `in_cone` over the box,
// in (one-norm, lex) order
Scan indecomposable_scan(const Box& box, const std::vector<char>& in_cone) {
    Scan s;
    box.for_each_by_norm([&](const IntVec& p) {
        size_t idx = box.index(p);
        if (!in_cone[idx] || idx == 0) return;
        for (size_t k = 0; k < s.kept.size(); ++k) {
            const IntVec& g = s.kept[k];
            bool fits = true;
            for (size_t i = 0; i < p.size(); ++i)
                if (p[i] < g[i]) {
                    fits = false;
                    break;
                }
            if (fits && in_cone[idx - s.kept_off[k]]) return;  // p = g + member
        }
        s.kept.push_back(p);
        s.kept_off.push_back(idx);
    });
    return s;
}

Intersection intersect_boxed(const std::vector<GeneratorSet>& sets, const Box& box,
                             const BigInt& radius, bool complete) {
    std::vector<std::vector<int>> tables;
    tables.reserve(sets.size());
    for (const GeneratorSet& g : sets) tables.push_back(reach_table(box, g.gens));
    std::vector<char> common(box.cells, 1);
    for (const auto& t : tables)
        for (size_t i = 0; i < box.cells; ++i)
            if (t[i] == -2) common[i] = 0;

    Scan s = indecomposable_scan(box, common);

    Intersection out;
    out.gens = GeneratorSet{int(box.caps.size()), s.kept};
    out.radius = radius;
    out.complete = complete;
    out.witnesses.resize(s.kept.size());
    for (size_t k = 0; k < s.kept.size(); ++k)
        for (size_t i = 0; i < sets.size(); ++i)
            out.witnesses[k].push_back(walk_witness(box, tables[i], sets[i].gens, s.kept[k]));
    return out;
}

}  // namespace

GeneratorSet reduce(const GeneratorSet& g) {
    if (g.gens.empty()) return g;
    IntVec caps(g.dim, 0);
    for (const IntVec& v : g.gens)
        for (int i = 0; i < g.dim; ++i) caps[i] = std::max(caps[i], v[i]);
    Box box(caps);
    Config cfg;
    if (box.cells > size_t(cfg.max_box_points)) throw budget_error("reduce: box exceeds budget");
    std::vector<int> t = reach_table(box, g.gens);
    std::vector<char> in_cone(box.cells);
    for (size_t i = 0; i < box.cells; ++i) in_cone[i] = t[i] != -2;
    Scan s = indecomposable_scan(box, in_cone);
    std::vector<IntVec> kept;
    for (const IntVec& v : g.gens)
        if (std::binary_search(s.kept.begin(), s.kept.end(), v, norm_lex_less))
            kept.push_back(v);
    return make_generator_set(g.dim, std::move(kept));
}

Intersection intersect_many(const std::vector<GeneratorSet>& sets, Int delta, const Config& cfg) {
    if (sets.empty()) throw std::invalid_argument("intersect_many: no input sets");
    int d = sets[0].dim;
    for (const GeneratorSet& g : sets) {
        if (g.dim != d) throw std::invalid_argument("intersect_many: dimension mismatch");
        if (g.max_entry() > delta)
            throw std::invalid_argument("intersect_many: generator entry exceeds delta");
    }
    if (delta < 1) throw std::invalid_argument("intersect_many: delta must be positive");

    int ell = int(sets.size());
    BigInt pair_elem = pair_bounds(d, delta).element;
    auto box_fits = [&](const BigInt& r) {
        return big_pow(r + 1, (unsigned long)d) <= cfg.max_box_points;
    };

    BigInt radius;
    bool complete;
    if (ell <= 2) {
        radius = pair_elem;
        complete = true;
        if (!box_fits(radius)) throw budget_error("intersect: candidate box exceeds budget");
    } else {
        BigInt full = delta * multi_witness_bound(d, delta, ell);
        if (box_fits(full)) {
            radius = full;
            complete = true;
        } else if (box_fits(pair_elem)) {
            radius = pair_elem;
            complete = false;  // certified only within the searched box
        } else {
            throw budget_error("intersect: candidate box exceeds budget");
        }
    }

    Box box(IntVec(d, (Int)radius));
    return intersect_boxed(sets, box, radius, complete);
}

Intersection intersect_two(const GeneratorSet& b1, const GeneratorSet& b2, Int delta,
                           const Config& cfg) {
    return intersect_many({b1, b2}, delta, cfg);
}

}  // namespace graug::cones
