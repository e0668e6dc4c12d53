#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "graug/gen.hpp"
#include "graug/steinitz.hpp"
#include "oracles.hpp"

using namespace graug;

namespace {

bool is_permutation_of_all(const std::vector<int>& perm, size_t n) {
    if (perm.size() != n) return false;
    std::vector<int> s(perm);
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < n; ++i)
        if (s[i] != int(i)) return false;
    return true;
}

}  // namespace

TEST_CASE("one-dimensional alternating family stays within delta") {
    std::vector<IntVec> v{{1}, {1}, {-1}, {-1}};
    auto perm = steinitz::reorder(v, 1);
    REQUIRE(is_permutation_of_all(perm, 4));
    CHECK(steinitz::prefix_radius(v, perm) <= 1);
}

TEST_CASE("planar triple meets the dimension-times-delta bound") {
    std::vector<IntVec> v{{1, 0}, {0, 1}, {-1, -1}};
    auto perm = steinitz::reorder(v, 1);
    REQUIRE(is_permutation_of_all(perm, 3));
    Int lib = steinitz::prefix_radius(v, perm);
    CHECK(lib <= 2);

    // the returned order cannot beat the best over all 3! orders
    std::vector<int> p{0, 1, 2};
    Int best = lib;
    do {
        best = std::min(best, steinitz::prefix_radius(v, p));
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(best <= lib);
}

TEST_CASE("prefix radius recomputes the running max-norm") {
    CHECK(steinitz::prefix_radius({{0, 0}}, {0}) == 0);
    CHECK(steinitz::prefix_radius({{1}, {-1}}, {0, 1}) == 1);
    CHECK(steinitz::prefix_radius({}, {}) == 0);

    gen::Rng rng(99);
    for (int t = 0; t < 10; ++t) {
        auto fam = gen::zero_sum_family(rng.uniform(1, 1000000), 3, 4, 12);
        std::vector<int> perm(fam.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.eng);
        IntVec sum(3, 0);
        Int want = 0;
        for (int i : perm) {
            sum = vec_add(sum, fam[i]);
            want = std::max(want, inf_norm(sum));
        }
        CHECK(steinitz::prefix_radius(fam, perm) == want);
    }
}

TEST_CASE("random zero-sum families reorder within d*delta") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int d = 1 + int(seed % 4);
        Int delta = 1 + Int(seed % 5);
        auto fam = gen::zero_sum_family(seed, d, delta, 40);
        auto perm = steinitz::reorder(fam, delta);
        REQUIRE(is_permutation_of_all(perm, fam.size()));
        CHECK(steinitz::prefix_radius(fam, perm) <= Int(d) * delta);
    }
}

TEST_CASE("at most d vectors come back in input order") {
    std::vector<IntVec> v{{2, -2, 0}, {-2, 2, 0}};
    auto perm = steinitz::reorder(v, 2);
    CHECK(perm == std::vector<int>{0, 1});
    CHECK(steinitz::reorder({}, 1).empty());
}

TEST_CASE("reorder validates its inputs") {
    CHECK_THROWS_AS(steinitz::reorder({{1}, {1}}, 1), std::invalid_argument);   // sum nonzero
    CHECK_THROWS_AS(steinitz::reorder({{3}, {-3}}, 2), std::invalid_argument);  // entry beyond delta
    CHECK_THROWS_AS(steinitz::reorder({{1}, {1, -1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(steinitz::reorder({{1}, {-1}}, -1), std::invalid_argument);
}

TEST_CASE("prefix radius rejects non-permutations") {
    std::vector<IntVec> v{{1}, {-1}};
    CHECK_THROWS_AS(steinitz::prefix_radius(v, {0}), std::invalid_argument);
    CHECK_THROWS_AS(steinitz::prefix_radius(v, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(steinitz::prefix_radius(v, {0, 2}), std::invalid_argument);
}
