#include <doctest.h>

#include <climits>
#include <stdexcept>

#include "graug/ints.hpp"

using namespace graug;

TEST_CASE("checked arithmetic is exact in range") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_sub(2, 5) == -3);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK(checked_neg(7) == -7);
    CHECK(abs_val(-9) == 9);
    CHECK(abs_val(9) == 9);
}

TEST_CASE("checked arithmetic signals overflow instead of wrapping") {
    CHECK_THROWS_AS(checked_add(LLONG_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(LLONG_MIN, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(LLONG_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_neg(LLONG_MIN), std::overflow_error);
    CHECK_THROWS_AS(abs_val(LLONG_MIN), std::overflow_error);
}

TEST_CASE("exactness at the documented scale: entries to 1e6, dims to 1e3") {
    // worst case |dot| = 1e3 * 1e6 * 1e6 = 1e15, comfortably inside Int
    IntVec a(1000, 1000000), b(1000, -1000000);
    CHECK(dot(a, b) == -1000000000000000LL);
    CHECK(one_norm(b) == 1000000000LL);

    // past the representable range the operations throw, never wrap
    IntVec huge(4, Int(3000000000000000000LL));
    CHECK_THROWS_AS(one_norm(huge), std::overflow_error);
}

TEST_CASE("floor and ceil division agree with the mathematical definition") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(6, 3) == 2);
    CHECK(ceil_div(6, 3) == 2);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(ceil_div(-6, 3) == -2);
    CHECK(floor_div(0, 5) == 0);
    CHECK(ceil_div(0, 5) == 0);

    // exhaustive small-range cross-check against a scan
    for (Int a = -20; a <= 20; ++a)
        for (Int b = 1; b <= 6; ++b) {
            Int f = floor_div(a, b), c = ceil_div(a, b);
            CHECK(f * b <= a);
            CHECK((f + 1) * b > a);
            CHECK(c * b >= a);
            CHECK((c - 1) * b < a);
        }
}

TEST_CASE("vector helpers") {
    IntVec v{3, -4, 0};
    CHECK(one_norm(v) == 7);
    CHECK(inf_norm(v) == 4);
    CHECK(!is_zero(v));
    CHECK(is_zero(IntVec{0, 0}));
    CHECK(dot(IntVec{1, 2}, IntVec{3, 4}) == 11);
    CHECK(vec_add(IntVec{1, 2}, IntVec{3, -5}) == IntVec{4, -3});
    CHECK(vec_sub(IntVec{1, 2}, IntVec{3, -5}) == IntVec{-2, 7});
    CHECK(vec_scale(-2, IntVec{1, -3}) == IntVec{-2, 6});
    CHECK_THROWS_AS(dot(IntVec{1}, IntVec{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(vec_add(IntVec{1}, IntVec{1, 2}), std::invalid_argument);
}

TEST_CASE("norm-lex order sorts by one-norm first") {
    CHECK(norm_lex_less(IntVec{1, 0}, IntVec{0, 2}));   // norm 1 before norm 2
    CHECK(!norm_lex_less(IntVec{0, 2}, IntVec{1, 0}));
    CHECK(norm_lex_less(IntVec{-1, 1}, IntVec{1, -1}));  // equal norm, lex breaks
    CHECK(!norm_lex_less(IntVec{1, 1}, IntVec{1, 1}));   // irreflexive
    CHECK(lex_less(IntVec{1, 2}, IntVec{1, 3}));
    CHECK(!lex_less(IntVec{2}, IntVec{1, 9}));
}

TEST_CASE("big integer powers match repeated multiplication") {
    CHECK(big_pow(2, 10) == 1024);
    CHECK(big_pow(3, 0) == 1);
    CHECK(big_pow(7, 5) == 16807);
    CHECK(big_pow(1, 1000000) == 1);

    for (int b = 2; b <= 5; ++b)
        for (unsigned long e = 0; e <= 40; ++e) {
            BigInt slow = 1;
            for (unsigned long k = 0; k < e; ++k) slow *= b;
            CHECK(big_pow(b, e) == slow);
        }
}
