#include "polyomega/barvinok.hpp"
#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include "support/testing.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace polyomega;
using polyomega::testing::cone;
using polyomega::testing::rv;

namespace {

// Box around the apex reaching 4 units past the parallelepiped in each direction.
void expect_exact(const SymbolicCone &c, const ConeCombination &l) {
    const std::size_t d = c.ambient_dimension();
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = floor(c.apex[i]) - 4;
        hi[i] = floor(c.apex[i]) + 4;
    }
    for_each_box_point(lo, hi, [&](const IntVec &x) {
        ASSERT_EQ(eval_combination(l, x), polyomega::testing::oracle_contains(c, x) ? 1 : 0);
    });
}

} // namespace

TEST(Index, Examples) {
    EXPECT_EQ(index(cone({{1, 0}, {1, 3}})), 3);
    EXPECT_EQ(index(cone({{1, 0}, {1, 2}})), 2);
    EXPECT_EQ(index(cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 1);
    EXPECT_THROW(index(cone({{1, 0, 0}})), DimensionError);
}

TEST(Barvinok, TwoTermIdentity) {
    const ConeCombination l = barvinok_decompose(cone({{1, 0}, {1, 2}}));
    ConeCombination expected;
    expected.add(cone({{1, 0}, {0, 1}}), 1);
    expected.add(cone({{0, 1}, {1, 2}}, {}, {1, 0}), -1);
    EXPECT_EQ(l, expected);
    polyomega::testing::for_each_point(2, -1, 6, [&](const IntVec &x) {
        EXPECT_EQ(eval_combination(l, x), contains(cone({{1, 0}, {1, 2}}), x) ? 1 : 0);
    });
}

TEST(Barvinok, UnimodularInputIsReturnedUnchanged) {
    const SymbolicCone c = cone({{1, 0}, {2, 1}}, rv({1, 1}), {0, 1});
    ConeCombination expected;
    expected.add(c, 1);
    EXPECT_EQ(barvinok_decompose(c), expected);
}

TEST(Barvinok, IndexThreeCone) {
    const SymbolicCone c = cone({{1, 0}, {1, 3}});
    const ConeCombination l = barvinok_decompose(c);
    for (const auto &[leaf, mult] : l)
        EXPECT_EQ(index(leaf), 1);
    polyomega::testing::for_each_point(2, 0, 10, [&](const IntVec &x) {
        EXPECT_EQ(eval_combination(l, x), contains(c, x) ? 1 : 0);
    });
}

TEST(Barvinok, ExactOnRandomCones) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 1 + t % 3;
        const SymbolicCone c = polyomega::testing::random_cone(rng, d, 30, 5);
        const ConeCombination l = barvinok_decompose(c, {1, static_cast<std::uint64_t>(t)});
        const double ind = index(c).get_d();
        const double lg = std::log2(ind) + 1;
        const double envelope = d * std::pow(lg, d * std::log2(static_cast<double>(d)) + 1);
        EXPECT_LE(static_cast<double>(l.size()), envelope);
        for (const auto &[leaf, mult] : l) {
            EXPECT_EQ(index(leaf), 1);
            EXPECT_EQ(leaf.apex, c.apex);
        }
        expect_exact(c, l);
    }
}

TEST(Barvinok, ThresholdLeavesLargerIndices) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        const SymbolicCone c = polyomega::testing::random_cone(rng, 2 + t % 2, 20, 3);
        const ConeCombination l = barvinok_decompose(c, {5, 0});
        for (const auto &[leaf, mult] : l)
            EXPECT_LE(index(leaf), 5);
        expect_exact(c, l);
    }
}

TEST(Barvinok, SeedOnlyChangesPresentation) {
    const SymbolicCone c = cone({{3, 1, 0}, {0, 5, 2}, {1, 1, 7}}, rv({0, 0, 0}), {1, 0, 1});
    for (std::uint64_t seed : {0u, 1u, 2u, 3u})
        expect_exact(c, barvinok_decompose(c, {1, seed}));
}

TEST(Barvinok, RejectsBadInput) {
    EXPECT_THROW(barvinok_decompose(cone({{1, 0, 0}, {0, 1, 0}})), DimensionError);
    EXPECT_THROW(barvinok_decompose(cone({{1, 0}, {1, 2}}), {0, 0}), Error);
}
