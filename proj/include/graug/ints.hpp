#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graug {

using Int = long long;
using IntVec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// a search or table grew past its configured budget; results would be partial
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an exact result would exceed the configured digit budget
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int abs_val(Int a) { return a < 0 ? checked_neg(a) : a; }

// floor(a/b) and ceil(a/b) for b > 0, exact for negative a as well
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline Int one_norm(const IntVec& v) {
    Int s = 0;
    for (Int x : v) s = checked_add(s, abs_val(x));
    return s;
}

inline Int inf_norm(const IntVec& v) {
    Int m = 0;
    for (Int x : v) {
        Int a = abs_val(x);
        if (a > m) m = a;
    }
    return m;
}

inline bool is_zero(const IntVec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline IntVec vec_scale(Int k, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
    return r;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// strict weak order: one-norm first, then lexicographic
inline bool norm_lex_less(const IntVec& a, const IntVec& b) {
    Int na = one_norm(a), nb = one_norm(b);
    if (na != nb) return na < nb;
    return lex_less(a, b);
}

// b^e for big integers, e >= 0
inline BigInt big_pow(const BigInt& b, unsigned long e) {
    BigInt r = 1, base = b;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

}  // namespace graug
