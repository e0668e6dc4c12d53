#include <doctest.h>

#include <utility>
#include <vector>

#include "graug/lowerbound.hpp"
#include "oracles.hpp"

using namespace graug;
using lowerbound::Family;

namespace {

long bit_count(BigInt v) {
    long b = 0;
    while (v > 0) {
        v >>= 1;
        ++b;
    }
    return b;
}

void check_kernel_witness(const IntMatrix& m, const lowerbound::Certificate& cert) {
    REQUIRE(cert.witness.size() == size_t(m.cols));
    CHECK(cert.witness[0] == cert.min_coord);
    for (int r = 0; r < m.rows; ++r) {
        BigInt acc = 0;
        for (int c = 0; c < m.cols; ++c) acc += BigInt(m.at(r, c)) * cert.witness[size_t(c)];
        CHECK(acc == 0);
    }
}

}  // namespace

TEST_CASE("chain family matrices") {
    CHECK(lowerbound::harmonic_matrix(2) == IntMatrix(1, 2, {-1, 2}));
    CHECK(lowerbound::harmonic_matrix(3) == IntMatrix(2, 3, {-1, 2, 0, -1, 0, 3}));
    IntMatrix m4 = lowerbound::harmonic_matrix(4);
    CHECK(m4.rows == 3);
    CHECK(m4.cols == 4);
    for (int i = 0; i < 3; ++i) {
        CHECK(m4.at(i, 0) == -1);
        CHECK(m4.at(i, i + 1) == i + 2);
    }
    CHECK_THROWS_AS(lowerbound::harmonic_matrix(1), std::invalid_argument);
    CHECK_THROWS_AS(lowerbound::harmonic_matrix(200000), size_error);
}

TEST_CASE("chain family certificates equal the lcm and are minimal") {
    BigInt want[]{2, 6, 12, 60, 60, 420};
    for (Int delta = 2; delta <= 7; ++delta) {
        auto cert = lowerbound::harmonic_certificate(delta);
        CHECK(cert.min_coord == want[delta - 2]);
        CHECK(cert.min_coord == oracles::lcm_upto(long(delta)));
        CHECK(cert.bits == bit_count(cert.min_coord));
        check_kernel_witness(lowerbound::harmonic_matrix(delta), cert);
    }

    // a kernel point needs x0 divisible by every row multiplier, so no
    // smaller positive first coordinate can work
    for (Int delta = 2; delta <= 5; ++delta) {
        long lcm = oracles::lcm_upto(long(delta)).convert_to<long>();
        for (long x0 = 1; x0 < lcm; ++x0) {
            bool all = true;
            for (Int k = 2; k <= delta; ++k)
                if (x0 % k != 0) {
                    all = false;
                    break;
                }
            CHECK(!all);
        }
    }
}

TEST_CASE("digit family matrix layout for two digits base two") {
    CHECK(lowerbound::encoded_matrix(2, 1) ==
          IntMatrix(4, 5,
                    {0, 2, -1, 0, 0,    // carry chain of the z=2 block
                     -1, 0, 1, 0, 0,    // digits of 2 are (0,1)
                     0, 0, 0, 2, -1,    // carry chain of the z=3 block
                     -1, 0, 0, 1, 1})); // digits of 3 are (1,1)
    CHECK_THROWS_AS(lowerbound::encoded_matrix(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lowerbound::encoded_matrix(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(lowerbound::encoded_matrix(10, 5), size_error);
}

TEST_CASE("digit family certificates cover the encoded range") {
    auto c21 = lowerbound::encoded_certificate(2, 1);
    CHECK(c21.min_coord == 6);  // lcm of 2..3
    check_kernel_witness(lowerbound::encoded_matrix(2, 1), c21);

    auto c22 = lowerbound::encoded_certificate(2, 2);
    CHECK(c22.min_coord == 420);  // lcm of 2..7
    CHECK(c22.min_coord == oracles::lcm_upto(7));
    check_kernel_witness(lowerbound::encoded_matrix(2, 2), c22);

    auto c23 = lowerbound::encoded_certificate(2, 3);
    CHECK(c23.min_coord == 360360);  // lcm of 2..15
    CHECK(c23.min_coord == oracles::lcm_upto(15));
    CHECK(c23.bits == bit_count(c23.min_coord));

    // the digit row of block z forces x0 = z * (first block column), so x0
    // must be divisible by every z up to the largest encoded value
    const std::vector<std::pair<Int, int>> cases{{2, 1}, {2, 2}, {3, 1}};
    for (auto [delta, s] : cases) {
        Int top = 1;
        for (int j = 0; j <= s; ++j) top *= delta;
        --top;
        long lcm = oracles::lcm_upto(long(top)).convert_to<long>();
        CHECK(lowerbound::encoded_certificate(delta, s).min_coord == lcm);
        for (long x0 = 1; x0 < lcm; ++x0) {
            bool all = true;
            for (Int z = 2; z <= top; ++z)
                if (x0 % z != 0) {
                    all = false;
                    break;
                }
            CHECK(!all);
        }
    }
}

TEST_CASE("minimum first coordinate checks the matrix against the family") {
    CHECK(lowerbound::min_first_coordinate(lowerbound::harmonic_matrix(3), Family::harmonic, 3) ==
          6);
    CHECK(lowerbound::min_first_coordinate(lowerbound::encoded_matrix(2, 1), Family::encoded, 2,
                                           1) == 6);
    CHECK_THROWS_AS(
        lowerbound::min_first_coordinate(lowerbound::harmonic_matrix(3), Family::encoded, 2, 1),
        std::invalid_argument);
    IntMatrix tampered = lowerbound::harmonic_matrix(3);
    tampered.at(0, 1) = 5;
    CHECK_THROWS_AS(lowerbound::min_first_coordinate(tampered, Family::harmonic, 3),
                    std::invalid_argument);
}

TEST_CASE("growth table rows follow the lcm of the encoded range") {
    auto rows = lowerbound::growth_table(2, 3, 1, 2);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].delta == 2);
    CHECK(rows[0].s == 1);
    CHECK(rows[0].value == 6);
    CHECK(rows[1].value == 420);       // delta 2, s 2, top 7
    CHECK(rows[2].value == 840);       // delta 3, s 1, top 8
    CHECK(rows[3].value == oracles::lcm_upto(26));
    for (const auto& r : rows) CHECK(r.bits == bit_count(r.value));
    CHECK(rows[0].bits < rows[1].bits);  // deeper digit strings grow the bound
    CHECK(rows[2].bits < rows[3].bits);
}

TEST_CASE("growth table refuses oversized ranges") {
    CHECK_THROWS_AS(lowerbound::growth_table(2, 2, 9, 9, 100), size_error);
    CHECK_THROWS_AS(lowerbound::growth_table(1, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lowerbound::growth_table(2, 2, 2, 1), std::invalid_argument);
}
