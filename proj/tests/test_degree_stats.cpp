#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phibound/degree_stats.hpp"

using namespace phibound;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs)
{
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("mean degree")
{
    CHECK(mean_degree(DegreeStats(cycle_graph(5))) == ExactRatio(2));
    CHECK(mean_degree(DegreeStats(star_graph(4))) == ExactRatio(3, 2));
    CHECK(mean_degree(DegreeStats(empty_graph(7))) == ExactRatio(0));
    CHECK_THROWS_AS(mean_degree(DegreeStats(empty_graph(0))), std::invalid_argument);
}

TEST_CASE("quadratic mean squared")
{
    CHECK(quadratic_mean_squared(DegreeStats(cycle_graph(5))) == ExactRatio(4));
    CHECK(quadratic_mean_squared(DegreeStats(star_graph(4))) == ExactRatio(3));
    CHECK(quadratic_mean_squared(DegreeStats(complete_graph(4))) == ExactRatio(9));
    CHECK_THROWS_AS(quadratic_mean_squared(DegreeStats(empty_graph(0))), std::invalid_argument);

    const ExactRatio r = quadratic_mean_squared(DegreeStats::from_degrees({1, 1, 2}));
    CHECK(numerator(r) == 2);
    CHECK(denominator(r) == 1);
    const ExactRatio lowest = quadratic_mean_squared(DegreeStats::from_degrees({1, 2, 2, 2}));
    CHECK(numerator(lowest) == 13);
    CHECK(denominator(lowest) == 4);
}

TEST_CASE("degree stats sums")
{
    const DegreeStats s(star_graph(4));
    CHECK(s.sum() == 6);
    CHECK(s.sum_squares() == 12);
    CHECK(s.count() == 4);
    CHECK_THROWS_AS(DegreeStats::from_degrees({1, -1}), std::invalid_argument);
}

TEST_CASE("elementary symmetric polynomials")
{
    const auto xs = big({1, 2, 3});
    CHECK(elementary_symmetric(xs, 2) == 11);
    CHECK(elementary_symmetric(xs, 1) == 6);
    CHECK(elementary_symmetric(big({2, 2, 2}), 3) == 8);
    CHECK_THROWS_AS(elementary_symmetric(xs, 0), std::out_of_range);
    CHECK_THROWS_AS(elementary_symmetric(xs, 4), std::out_of_range);
    CHECK(elementary_symmetric_or_zero(big({5}), 2) == 0);
    CHECK(elementary_symmetric_or_zero(big({5, 4}), 3) == 0);
}

TEST_CASE("elementary symmetric agrees with subset expansion")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> len(1, 10);
    std::uniform_int_distribution<int> val(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> xs(static_cast<std::size_t>(len(rng)));
        for (auto& x : xs) {
            x = val(rng);
        }
        for (int s = 1; s <= static_cast<int>(xs.size()); ++s) {
            REQUIRE(elementary_symmetric(xs, s) == oracle::sigma_by_subsets(xs, s));
        }
    }
}

TEST_CASE("elementary symmetric does not overflow")
{
    std::vector<BigInt> xs(40, BigInt(1) << 40);
    // sigma_20 = C(40,20) * 2^800
    CHECK(elementary_symmetric(xs, 20) == binomial(40, 20) * (BigInt(1) << 800));
}

TEST_CASE("power-sum identities")
{
    CHECK(power_sum_identity_check(big({1, 2, 3})));
    CHECK(power_sum_identity_check(big({5})));
    CHECK(power_sum_identity_check(big({2, 2})));
    CHECK_THROWS_AS(power_sum_identity_check(std::vector<BigInt>{}), std::invalid_argument);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(1, 10);
    std::uniform_int_distribution<int> val(0, 20);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<BigInt> xs(static_cast<std::size_t>(len(rng)));
        for (auto& x : xs) {
            x = val(rng);
        }
        REQUIRE(power_sum_identity_check(xs));
    }
}

TEST_CASE("Maclaurin check examples")
{
    auto r = maclaurin_check(big({2, 2, 2}), 2);
    CHECK(r.holds);
    CHECK(r.equality);

    r = maclaurin_check(big({1, 2, 3}), 2);
    CHECK(r.holds);
    CHECK_FALSE(r.equality);

    r = maclaurin_check(big({0, 0, 6}), 3);
    CHECK(r.holds);
    CHECK_FALSE(r.equality);

    // s = 1 is always an identity
    CHECK(maclaurin_check(big({0, 7, 1}), 1).equality);

    const std::vector<ExactRatio> halves{ExactRatio(1, 2), ExactRatio(1, 2), ExactRatio(1, 3)};
    CHECK(maclaurin_check(halves, 3).holds);
    CHECK_FALSE(maclaurin_check(halves, 3).equality);

    CHECK_THROWS_AS(maclaurin_check(big({1, 2}), 3), std::out_of_range);
    CHECK_THROWS_AS(maclaurin_check(std::vector<ExactRatio>{ExactRatio(-1), ExactRatio(2)}, 2),
                    std::invalid_argument);
}

TEST_CASE("Maclaurin property: holds always, equality iff all equal for s >= 2")
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> len(1, 10);
    std::uniform_int_distribution<int> val(0, 20);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<BigInt> xs(static_cast<std::size_t>(len(rng)));
        const int constant = val(rng);
        const bool all_same = coin(rng) == 0;
        for (auto& x : xs) {
            x = all_same ? constant : val(rng);
        }
        const bool equal = std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
        for (int s = 1; s <= static_cast<int>(xs.size()); ++s) {
            const auto r = maclaurin_check(xs, s);
            REQUIRE(r.holds);
            if (s >= 2) {
                REQUIRE(r.equality == equal);
            }
        }
    }
}

TEST_CASE("quadratic mean dominates arithmetic mean, equality iff regular")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = gnp_graph(1 + trial % 12, Probability{static_cast<std::uint64_t>(trial % 4), 3}, rng);
        const DegreeStats s(g);
        const ExactRatio mean = mean_degree(s);
        CHECK(mean == ExactRatio(2 * BigInt(g.edge_count()), BigInt(g.order())));
        const ExactRatio q2 = quadratic_mean_squared(s);
        CHECK(q2 >= mean * mean);
        CHECK((q2 == mean * mean) == g.is_regular());
    }
}
