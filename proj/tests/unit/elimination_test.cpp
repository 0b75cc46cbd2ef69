#include "polyomega/exactmath.hpp"
#include "polyomega/elimination.hpp"

#include "support/testing.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polyomega;
using polyomega::testing::columns;
using polyomega::testing::cone;
using polyomega::testing::iv;
using polyomega::testing::PlainSystem;
using polyomega::testing::rv;

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void expect_matches_oracle(const ConeCombination &l, const PlainSystem &s, long box) {
    polyomega::testing::for_each_point(s.d(), 0, box, [&](const IntVec &x) {
        ASSERT_EQ(eval_combination(l, x), s.contains(x) ? 1 : 0) << "at " << x[0];
    });
}

} // namespace

TEST(MacMahonLift, Examples) {
    IntMat a(1, 2);
    a(0, 0) = 2;
    a(0, 1) = 3;
    const SymbolicCone c = macmahon_lift(a, iv({5}));
    EXPECT_EQ(c.generators, columns({{1, 0, 2}, {0, 1, 3}}));
    EXPECT_EQ(c.apex, rv({0, 0, -5}));
    EXPECT_EQ(c.open, (Openness{0, 0}));

    const SymbolicCone id = macmahon_lift(IntMat::identity(2), iv({0, 0}));
    EXPECT_EQ(id.generators, columns({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    EXPECT_EQ(id.apex, rv({0, 0, 0, 0}));

    IntMat ones(1, 2);
    ones(0, 0) = ones(0, 1) = 1;
    const SymbolicCone c100 = macmahon_lift(ones, iv({100}));
    EXPECT_EQ(c100.generators, columns({{1, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(c100.apex, rv({0, 0, -100}));
}

TEST(EliminateLastCoordinate, FirstMacMahonRule) {
    const ConeCombination l = eliminate_last_coordinate(cone({{1, 0, 1}, {0, 1, -3}}));
    ConeCombination expected;
    expected.add(cone({{1, 0}, {0, 1}}), 1);
    expected.add(cone({{0, 1}, {3, 1}}, {}, {1, 0}), -1);
    EXPECT_EQ(l, expected);

    const SymbolicCone target = cone({{1, 0}, {3, 1}});
    polyomega::testing::for_each_point(2, 0, 10, [&](const IntVec &x) {
        EXPECT_EQ(eval_combination(l, x), contains(target, x) ? 1 : 0);
    });
}

TEST(EliminateLastCoordinate, NegativeApexUsesUpwardGenerators) {
    const ConeCombination l = eliminate_last_coordinate(cone({{1, 0, 1}, {0, 1, 1}}, rv({0, 0, -2})));
    EXPECT_EQ(l.size(), 2u);
    polyomega::testing::for_each_point(2, 0, 5, [&](const IntVec &x) {
        EXPECT_EQ(eval_combination(l, x), x[0] + x[1] >= 2 ? 1 : 0);
    });
}

TEST(EliminateLastCoordinate, EverythingBelowTheHyperplane) {
    EXPECT_TRUE(eliminate_last_coordinate(cone({{1, -1}}, rv({0, -1}))).empty());
}

TEST(Eliminate, SingleInequality) {
    const PlainSystem s{{{2, 3}}, {0}, {5}};
    const LDSystem sys = s.to_system();
    expect_matches_oracle(eliminate(macmahon_lift(sys.a, sys.b), 1), s, 8);
}

TEST(Eliminate, IntroInequality) {
    const PlainSystem s{{{2, 3, -5}}, {0}, {4}};
    const LDSystem sys = s.to_system();
    expect_matches_oracle(eliminate(macmahon_lift(sys.a, sys.b), 1), s, 6);
}

TEST(Eliminate, ZeroRoundsIsTheInput) {
    const SymbolicCone c = cone({{1, 0, 2}, {0, 1, 3}}, rv({0, 0, -5}));
    ConeCombination expected;
    expected.add(c, 1);
    EXPECT_EQ(eliminate(c, 0), expected);
}

TEST(Solve, EqualityLine) {
    const PlainSystem s{{{1, 1}}, {1}, {100}};
    const ConeCombination l = solve(s.to_system());
    int hits = 0;
    polyomega::testing::for_each_point(2, 0, 101, [&](const IntVec &x) {
        const BigInt v = eval_combination(l, x);
        EXPECT_EQ(v, s.contains(x) ? 1 : 0);
        hits += v == 1;
    });
    EXPECT_EQ(hits, 101);
    for (const auto &[c, mult] : l)
        EXPECT_EQ(c.num_generators(), 2u);
}

TEST(Solve, Infeasible) {
    const PlainSystem s{{{1}, {-1}}, {0, 0}, {1, 0}};
    const ConeCombination l = solve(s.to_system());
    for (long x = 0; x <= 10; ++x)
        EXPECT_EQ(eval_combination(l, iv({x})), 0);
}

TEST(Solve, UnimodularTwoConstraintSystemCollapsesToOneCone) {
    // (a1, a2, b1, b2) = (5, 3, 3, 2): rows (b2, −b1)·x ≥ 0 and (−a2, a1)·x ≥ 1.
    const PlainSystem s{{{2, -3}, {-3, 5}}, {0, 0}, {0, 1}};
    ConeCombination first_round;
    EliminationOptions opts;
    opts.observer = [&](std::size_t i, const ConeCombination &c) {
        if (i == 1)
            first_round = c;
    };
    const ConeCombination l = solve(s.to_system(), nullptr, opts);
    ConeCombination c1;
    c1.add(cone({{5, 3, 1}, {0, 1, -3}}, RatVec{0, BigRat(1, 5), BigRat(-3, 5)}), 1);
    EXPECT_EQ(first_round, c1);
    ConeCombination expected;
    expected.add(cone({{5, 3}, {3, 2}}, rv({3, 2})), 1);
    EXPECT_EQ(l, expected);
    expect_matches_oracle(l, s, 20);
}

TEST(Solve, ExactOnRandomSystems) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        const PlainSystem s = polyomega::testing::random_system(rng);
        expect_matches_oracle(solve(s.to_system()), s, 8);
    }
}

TEST(Solve, MixedEqualitiesAgainstOracle) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        PlainSystem s = polyomega::testing::random_system(rng, 4);
        s.eq[0] = 1;
        expect_matches_oracle(solve(s.to_system()), s, 7);
    }
}

TEST(Solve, StructuralInvariantsAlongTheWay) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> unit(0, 1000);
    for (int t = 0; t < 80; ++t) {
        const PlainSystem s = polyomega::testing::random_system(rng);
        const std::size_t d = s.d();
        EliminationOptions opts;
        opts.observer = [&](std::size_t i, const ConeCombination &l) {
            EXPECT_LE(BigInt(l.size()), binomial(d + i, d));
            for (const auto &[c, mult] : l) {
                EXPECT_EQ(c.num_generators(), d);
                for (std::size_t j = 0; j < d; ++j) {
                    const IntVec g = c.generator(j);
                    EXPECT_TRUE(is_forward(g));
                    EXPECT_EQ(content(g), 1);
                }
                if (c.ambient_dimension() == d)
                    continue;
                // Forgetting the last coordinate is injective on the affine hull.
                IntMat proj(c.ambient_dimension() - 1, d);
                for (std::size_t r = 0; r + 1 < c.ambient_dimension(); ++r)
                    for (std::size_t j = 0; j < d; ++j)
                        proj(r, j) = c.generators(r, j);
                EXPECT_EQ(rank(proj), d);
                for (int k = 0; k < 50; ++k) {
                    RatVec lambda(d);
                    for (auto &x : lambda) {
                        x = BigRat(unit(rng), 97);
                        x.canonicalize();
                    }
                    const RatVec image = apply_rational(proj, lambda);
                    EXPECT_EQ(*solve_rational(proj, image), lambda);
                }
            }
        };
        const ConeCombination l = solve(s.to_system(), nullptr, opts);
        long a_max = 1;
        for (const auto &row : s.a)
            for (long x : row)
                a_max = std::max(a_max, std::abs(x));
        BigInt bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), d * a_max, d * d);
        for (const auto &[c, mult] : l)
            EXPECT_LE(abs(det(c.generators)), bound);
    }
}

TEST(Solve, TraceRecordsEveryRound) {
    const PlainSystem s{{{2, 3, -5}, {1, -1, 0}}, {0, 1}, {4, 0}};
    EliminationTrace trace;
    solve(s.to_system(), &trace);
    ASSERT_EQ(trace.size(), 3u);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        EXPECT_EQ(trace[i].iteration, i + 1);
        EXPECT_GT(trace[i].max_generator_bits, 0u);
    }
}

TEST(Solve, ThreadCountDoesNotChangeTheResult) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const PlainSystem s = polyomega::testing::random_system(rng);
        EliminationOptions par;
        par.threads = 4;
        EXPECT_EQ(solve(s.to_system()), solve(s.to_system(), nullptr, par));
    }
}

TEST(LDSystem, ValidatesShapes) {
    EXPECT_THROW(LDSystem::make(IntMat(1, 2), {Relation::Geq, Relation::Geq}, iv({1})),
                 DimensionError);
    EXPECT_THROW(LDSystem::make(IntMat(0, 2), {}, {}), DimensionError);
}
