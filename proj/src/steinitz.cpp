#include "graug/steinitz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graug::steinitz {

namespace {

// nonzero kernel vector of the (d+1) x f rational matrix W, or empty if the
// columns are independent; free column choice and pivoting are by first index
std::vector<BigRat> kernel_vector(std::vector<std::vector<BigRat>> w) {
    if (w.empty() || w[0].empty()) return {};
    int rows = int(w.size()), cols = int(w[0].size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (w[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(w[pr], w[row]);
        BigRat inv = w[row][col];
        for (int c = col; c < cols; ++c) w[row][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || w[r][col] == 0) continue;
            BigRat f = w[r][col];
            for (int c = col; c < cols; ++c) w[r][c] -= f * w[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return {};
    std::vector<BigRat> v(cols, BigRat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -w[r][free_col];
    return v;
}

}  // namespace

std::vector<int> reorder(const std::vector<IntVec>& vectors, Int delta) {
    int n = int(vectors.size());
    if (delta < 0) throw std::invalid_argument("reorder: negative delta");
    if (n == 0) return {};
    int d = int(vectors[0].size());
    if (d < 1) throw std::invalid_argument("reorder: vectors must have positive dimension");
    IntVec total(d, 0);
    for (const IntVec& v : vectors) {
        if (int(v.size()) != d) throw std::invalid_argument("reorder: mixed dimensions");
        if (inf_norm(v) > delta) throw std::invalid_argument("reorder: vector exceeds delta");
        total = vec_add(total, v);
    }
    if (!is_zero(total)) throw std::invalid_argument("reorder: vectors do not sum to zero");

    std::vector<int> perm(n);
    if (n <= d) {
        std::iota(perm.begin(), perm.end(), 0);
        return perm;
    }

    // peel one index at a time, keeping a fractional witness x on the active
    // set with sum(x) = |active| - d, sum(x_i v_i) = 0, 0 <= x <= 1
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    std::vector<BigRat> x(n, BigRat(n - d, n));

    for (int k = n; k > d; --k) {
        // rescale so the witness targets sum k-1-d, then walk to a vertex
        std::vector<BigRat> y(x);
        BigRat scale(k - 1 - d, k - d);
        for (BigRat& v : y) v *= scale;

        for (;;) {
            std::vector<int> frac;  // positions within active
            for (int p = 0; p < k; ++p)
                if (y[p] > 0 && y[p] < 1) frac.push_back(p);
            if (frac.empty()) break;
            std::vector<std::vector<BigRat>> w(d + 1, std::vector<BigRat>(frac.size()));
            for (size_t c = 0; c < frac.size(); ++c) {
                const IntVec& v = vectors[active[frac[c]]];
                for (int r = 0; r < d; ++r) w[r][c] = v[r];
                w[d][c] = 1;
            }
            std::vector<BigRat> dir = kernel_vector(std::move(w));
            if (dir.empty()) break;
            BigRat step(-1);
            for (size_t c = 0; c < frac.size(); ++c) {
                if (dir[c] == 0) continue;
                BigRat room;
                if (dir[c] > 0)
                    room = (1 - y[frac[c]]) / dir[c];
                else
                    room = y[frac[c]] / -dir[c];
                if (step < 0 || room < step) step = room;
            }
            for (size_t c = 0; c < frac.size(); ++c) y[frac[c]] += step * dir[c];
        }

        int drop = -1;
        for (int p = 0; p < k; ++p)
            if (y[p] == 0) {
                drop = p;
                break;
            }
        if (drop < 0) throw std::logic_error("reorder: vertex witness has no zero entry");
        perm[k - 1] = active[drop];
        active.erase(active.begin() + drop);
        y.erase(y.begin() + drop);
        x = std::move(y);
    }
    for (int p = 0; p < d && p < int(active.size()); ++p) perm[p] = active[p];

    if (prefix_radius(vectors, perm) > checked_mul((Int)d, delta))
        throw std::logic_error("reorder: prefix bound violated");
    return perm;
}

Int prefix_radius(const std::vector<IntVec>& vectors, const std::vector<int>& perm) {
    if (perm.size() != vectors.size()) throw std::invalid_argument("prefix_radius: length mismatch");
    std::vector<bool> seen(vectors.size(), false);
    for (int i : perm) {
        if (i < 0 || i >= int(vectors.size()) || seen[i])
            throw std::invalid_argument("prefix_radius: not a permutation");
        seen[i] = true;
    }
    if (vectors.empty()) return 0;
    IntVec sum(vectors[0].size(), 0);
    Int radius = 0;
    for (int i : perm) {
        sum = vec_add(sum, vectors[i]);
        radius = std::max(radius, inf_norm(sum));
    }
    return radius;
}

}  // namespace graug::steinitz
