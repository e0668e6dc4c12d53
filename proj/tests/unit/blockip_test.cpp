#include <doctest.h>

#include "graug/blockip.hpp"
#include "graug/gen.hpp"
#include "oracles.hpp"

using namespace graug;

TEST_CASE("optimum ties break to the lexicographically smallest point") {
    // max x1+x2 with x1+x2 = 3 in [0,2]^2: every feasible point is optimal
    IntMatrix m(1, 2, {1, 1});
    auto got = blockip::solve_small_ip(m, {3}, {0, 0}, {2, 2}, {1, 1});
    REQUIRE(got.has_value());
    CHECK(*got == IntVec{1, 2});
}

TEST_CASE("bound violations make the system infeasible") {
    IntMatrix m(1, 1, {1});
    CHECK(!blockip::solve_small_ip(m, {5}, {0}, {2}, {0}).has_value());
}

TEST_CASE("parity obstructions are detected") {
    IntMatrix m(1, 1, {2});
    CHECK(!blockip::solve_small_ip(m, {3}, {-4}, {4}, {1}).has_value());
}

TEST_CASE("zero columns force a pure right-hand-side check") {
    IntMatrix m(1, 0);
    CHECK(blockip::solve_small_ip(m, {0}, {}, {}, {}) == IntVec{});
    CHECK(!blockip::solve_small_ip(m, {1}, {}, {}, {}).has_value());
}

TEST_CASE("feasible point returns the lower corner when it solves the system") {
    IntMatrix m(2, 2, {1, 0, 1, 1});
    IntVec lower{-1, 2}, upper{3, 4};
    IntVec rhs = matvec(m, lower);
    CHECK(blockip::feasible_point(m, rhs, lower, upper) == lower);
}

TEST_CASE("solver matches full box enumeration on random systems") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        IntMatrix m = gen::matrix(seed, 2, 3, 3);
        gen::Rng rng(seed * 31 + 1);
        IntVec lower(3), upper(3), obj(3);
        for (int j = 0; j < 3; ++j) {
            lower[j] = rng.uniform(-2, 0);
            upper[j] = lower[j] + rng.uniform(0, 4);
            obj[j] = rng.uniform(-3, 3);
        }
        IntVec rhs(2);
        for (Int& v : rhs) v = rng.uniform(-4, 4);

        auto got = blockip::solve_small_ip(m, rhs, lower, upper, obj);
        oracles::IpResult want = oracles::brute_ip(m, rhs, lower, upper, obj);
        CHECK(got.has_value() == want.feasible);
        if (got && want.feasible) {
            CHECK(dot(obj, *got) == want.value);
            CHECK(*got == want.best);  // witness must be the lex-smallest optimum
        }
    }
}

TEST_CASE("identical inputs produce identical witnesses") {
    IntMatrix m = gen::matrix(5, 2, 4, 2);
    IntVec lower(4, -2), upper(4, 2), obj{1, -1, 2, 0}, rhs{1, -1};
    auto a = blockip::solve_small_ip(m, rhs, lower, upper, obj);
    auto b = blockip::solve_small_ip(m, rhs, lower, upper, obj);
    CHECK(a == b);
}

TEST_CASE("state budget exhaustion is distinct from infeasibility") {
    IntMatrix m(1, 2, {1, 1});
    blockip::Config cfg;
    cfg.max_states = 1;
    CHECK_THROWS_AS(blockip::solve_small_ip(m, {0}, {-2, -2}, {2, 2}, {0, 0}, cfg), budget_error);
}

TEST_CASE("inverted bounds are rejected") {
    IntMatrix m(1, 1, {1});
    CHECK_THROWS_AS(blockip::solve_small_ip(m, {0}, {1}, {0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(blockip::solve_small_ip(m, {0, 0}, {0}, {1}, {0}), std::invalid_argument);
}
