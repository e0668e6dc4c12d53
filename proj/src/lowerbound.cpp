#include "graug/lowerbound.hpp"

#include <stdexcept>

#include "graug/ints.hpp"

namespace graug::lowerbound {

namespace {

BigInt lcm_upto(const BigInt& n) {
    BigInt m = 1;
    for (BigInt k = 2; k <= n; ++k) m = boost::multiprecision::lcm(m, k);
    return m;
}

// base-delta digits of z, least significant first, padded to s+1 places
IntVec digits(Int z, Int delta, int s) {
    IntVec d;
    for (int j = 0; j <= s; ++j) {
        d.push_back(z % delta);
        z /= delta;
    }
    return d;
}

void check_kernel(const IntMatrix& m, const std::vector<BigInt>& x) {
    for (int r = 0; r < m.rows; ++r) {
        BigInt acc = 0;
        for (int c = 0; c < m.cols; ++c) acc += BigInt(m.at(r, c)) * x[(size_t)c];
        if (acc != 0) throw std::logic_error("certificate witness is not a kernel point");
    }
}

long bit_length(const BigInt& v) { return (long)boost::multiprecision::msb(v) + 1; }

Int encoded_top(Int delta, int s) {
    if (delta < 2) throw std::invalid_argument("encoded family: delta must be at least 2");
    if (s < 1) throw std::invalid_argument("encoded family: s must be at least 1");
    Int p = 1;
    for (int j = 0; j <= s; ++j) {
        p = checked_mul(p, delta);
        if (p > 100001) throw size_error("encoded family too large to materialize");
    }
    return p - 1;  // largest value writable with s+1 digits
}

}  // namespace

IntMatrix harmonic_matrix(Int delta) {
    if (delta < 2) throw std::invalid_argument("harmonic_matrix: delta must be at least 2");
    if (delta > 100000) throw size_error("harmonic family too large to materialize");
    IntMatrix m((int)delta - 1, (int)delta);
    for (int i = 0; i + 1 < (int)delta; ++i) {
        m.at(i, 0) = -1;
        m.at(i, i + 1) = (Int)i + 2;
    }
    return m;
}

IntMatrix encoded_matrix(Int delta, int s) {
    Int top = encoded_top(delta, s);
    int group = s + 1;  // one carry row per digit step plus the digit row
    int ngroups = (int)(top - 1);
    IntMatrix m(ngroups * group, 1 + ngroups * group);
    for (int g = 0; g < ngroups; ++g) {
        Int z = (Int)g + 2;
        int row0 = g * group;
        int col0 = 1 + g * group;
        for (int j = 0; j + 1 <= s; ++j) {
            m.at(row0 + j, col0 + j) = delta;
            m.at(row0 + j, col0 + j + 1) = -1;
        }
        m.at(row0 + s, 0) = -1;
        IntVec d = digits(z, delta, s);
        for (int j = 0; j <= s; ++j) m.at(row0 + s, col0 + j) = d[(size_t)j];
    }
    return m;
}

Certificate harmonic_certificate(Int delta) {
    IntMatrix m = harmonic_matrix(delta);
    Certificate cert;
    cert.min_coord = lcm_upto(delta);
    cert.witness.push_back(cert.min_coord);
    for (Int k = 2; k <= delta; ++k) cert.witness.push_back(cert.min_coord / k);
    check_kernel(m, cert.witness);
    cert.bits = bit_length(cert.min_coord);
    return cert;
}

Certificate encoded_certificate(Int delta, int s) {
    IntMatrix m = encoded_matrix(delta, s);
    Int top = encoded_top(delta, s);
    Certificate cert;
    cert.min_coord = lcm_upto(top);
    cert.witness.push_back(cert.min_coord);
    for (Int z = 2; z <= top; ++z) {
        BigInt w = cert.min_coord / z;
        for (int j = 0; j <= s; ++j) {
            cert.witness.push_back(w);
            w *= delta;
        }
    }
    check_kernel(m, cert.witness);
    cert.bits = bit_length(cert.min_coord);
    return cert;
}

BigInt min_first_coordinate(const IntMatrix& m, Family fam, Int delta, int s) {
    IntMatrix want = fam == Family::harmonic ? harmonic_matrix(delta) : encoded_matrix(delta, s);
    if (!(want == m))
        throw std::invalid_argument("min_first_coordinate: matrix is not the requested family instance");
    Certificate cert =
        fam == Family::harmonic ? harmonic_certificate(delta) : encoded_certificate(delta, s);
    return cert.min_coord;
}

std::vector<GrowthRow> growth_table(Int delta_lo, Int delta_hi, int s_lo, int s_hi, long limit) {
    if (delta_lo < 2 || delta_lo > delta_hi) throw std::invalid_argument("growth_table: bad delta range");
    if (s_lo < 1 || s_lo > s_hi) throw std::invalid_argument("growth_table: bad s range");
    std::vector<GrowthRow> rows;
    for (Int d = delta_lo; d <= delta_hi; ++d)
        for (int s = s_lo; s <= s_hi; ++s) {
            BigInt top = big_pow(BigInt(d), (unsigned long)s + 1) - 1;
            if (top > limit) throw size_error("growth_table: range too large");
            GrowthRow row;
            row.delta = d;
            row.s = s;
            row.value = lcm_upto(top);
            row.bits = bit_length(row.value);
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace graug::lowerbound
