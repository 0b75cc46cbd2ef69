#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include "support/testing.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polyomega;
using polyomega::testing::iv;
using polyomega::testing::rv;

namespace {

IntMat rows(std::initializer_list<std::initializer_list<long>> rs) {
    std::vector<std::vector<long>> tmp;
    for (auto r : rs)
        tmp.emplace_back(r);
    IntMat m(tmp.size(), tmp.front().size());
    for (std::size_t i = 0; i < tmp.size(); ++i)
        for (std::size_t j = 0; j < tmp[i].size(); ++j)
            m(i, j) = tmp[i][j];
    return m;
}

IntMat random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, long bound) {
    std::uniform_int_distribution<long> e(-bound, bound);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = e(rng);
    return m;
}

void expect_smith_invariants(const IntMat &v, const SmithDecomposition &d) {
    EXPECT_EQ(d.u * d.s * d.w, v);
    EXPECT_EQ(d.u * d.u_inv, IntMat::identity(v.rows()));
    EXPECT_EQ(d.w * d.w_inv, IntMat::identity(v.cols()));
    EXPECT_EQ(abs(det(d.u)), 1);
    EXPECT_EQ(abs(det(d.w)), 1);
    const std::size_t r = d.rank();
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (i != j)
                EXPECT_EQ(d.s(i, j), 0);
    for (std::size_t i = 0; i < std::min(v.rows(), v.cols()); ++i) {
        if (i < r)
            EXPECT_GT(d.diagonal(i), 0);
        else
            EXPECT_EQ(d.diagonal(i), 0);
        if (i + 1 < r)
            EXPECT_TRUE(mpz_divisible_p(d.diagonal(i + 1).get_mpz_t(),
                                        d.diagonal(i).get_mpz_t()));
    }
}

} // namespace

TEST(Prim, Examples) {
    EXPECT_EQ(prim(iv({2, 4, -6})), iv({1, 2, -3}));
    EXPECT_EQ(prim(iv({1, 0, 13})), iv({1, 0, 13}));
    EXPECT_EQ(prim(iv({0, -5, 10})), iv({0, -1, 2}));
}

TEST(Prim, ZeroVectorThrows) {
    try {
        prim(iv({0, 0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_STREQ(e.what(), "zero vector has no primitive form");
    }
}

TEST(Prim, Properties) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> e(-40, 40), c(1, 9);
    for (int t = 0; t < 200; ++t) {
        IntVec v = iv({e(rng), e(rng), e(rng)});
        if (v == iv({0, 0, 0}))
            continue;
        const IntVec p = prim(v);
        EXPECT_EQ(prim(p), p);
        EXPECT_EQ(content(p), 1);
        IntVec scaled = v;
        const long k = c(rng);
        for (auto &x : scaled)
            x *= k;
        EXPECT_EQ(prim(scaled), p);
        for (std::size_t i = 0; i < v.size(); ++i)
            EXPECT_EQ(p[i] * content(v), v[i]);
    }
}

TEST(Snf, TwoByTwoWithNontrivialDivisor) {
    const IntMat v = rows({{2, 6}, {-2, 2}});
    const SmithDecomposition d = snf(v);
    EXPECT_EQ(d.s, rows({{2, 0}, {0, 8}}));
    expect_smith_invariants(v, d);
}

TEST(Snf, Identity) {
    const IntMat v = IntMat::identity(3);
    const SmithDecomposition d = snf(v);
    EXPECT_EQ(d.s, v);
    expect_smith_invariants(v, d);
}

TEST(Snf, DiagonalNeedsMixing) {
    const IntMat v = rows({{4, 0}, {0, 6}});
    const SmithDecomposition d = snf(v);
    EXPECT_EQ(d.s, rows({{2, 0}, {0, 12}}));
    expect_smith_invariants(v, d);
}

TEST(Snf, RandomMatricesSatisfyInvariants) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 150; ++t) {
        const IntMat v = random_matrix(rng, dim(rng), dim(rng), 30);
        const SmithDecomposition d = snf(v);
        expect_smith_invariants(v, d);
        EXPECT_EQ(d.rank(), rank(v));
    }
}

TEST(Snf, RankDeficient) {
    const IntMat v = rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const SmithDecomposition d = snf(v);
    expect_smith_invariants(v, d);
    EXPECT_EQ(d.rank(), 2u);
}

TEST(Det, Examples) {
    EXPECT_EQ(det(rows({{2, 6}, {-2, 2}})), 16);
    EXPECT_EQ(det(IntMat::identity(4)), 1);
    EXPECT_EQ(det(rows({{1, 1}, {0, 3}})), 3);
    EXPECT_THROW(det(rows({{1, 2, 3}})), DimensionError);
}

TEST(Det, AgreesWithCofactorExpansionAndSmithForm) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = dim(rng);
        const IntMat v = random_matrix(rng, n, n, 50);
        std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = v(i, j);
        const BigInt d = det(v);
        EXPECT_EQ(BigRat(d), polyomega::testing::cofactor_det(m));

        const SmithDecomposition s = snf(v);
        BigInt prod = det(s.u) * det(s.w);
        for (std::size_t i = 0; i < n; ++i)
            prod *= s.diagonal(i);
        EXPECT_EQ(prod, d);
    }
}

TEST(SolveRational, Examples) {
    EXPECT_EQ(*solve_rational(rows({{1, 1}, {0, 3}}), rv({2, 3})), rv({1, 1}));
    EXPECT_FALSE(solve_rational(rows({{1}, {1}}), rv({1, 2})).has_value());
    const RatVec lambda = *solve_rational(rows({{2, 6}, {-2, 2}}), rv({1, 1}));
    EXPECT_EQ(lambda, (RatVec{BigRat(-1, 4), BigRat(1, 4)}));
}

TEST(SolveRational, DependentColumnsThrow) {
    try {
        solve_rational(rows({{1, 2}, {2, 4}}), rv({1, 2}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_STREQ(e.what(), "generators not linearly independent");
    }
}

TEST(SolveRational, RecoversRandomCoefficients) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = dim(rng), n = k + dim(rng) - 1;
        const IntMat v = random_matrix(rng, n, k, 9);
        if (rank(v) < k)
            continue;
        RatVec lambda(k);
        for (auto &x : lambda) {
            x = BigRat(num(rng), den(rng));
            x.canonicalize();
        }
        EXPECT_EQ(*solve_rational(v, apply_rational(v, lambda)), lambda);
    }
}

namespace {

// B' = B·T with T unimodular iff both are bases of the same lattice.
void expect_same_lattice(const IntMat &b, const IntMat &reduced) {
    const RatMat t = inverse(b) * to_rational(reduced);
    IntMat ti(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            ASSERT_TRUE(is_integer(t(i, j)));
            ti(i, j) = t(i, j).get_num();
        }
    const SmithDecomposition s = snf(ti);
    EXPECT_EQ(s.s, IntMat::identity(ti.rows()));
}

// Lovász and size conditions, δ = 3/4, computed directly.
void expect_lll_reduced(const IntMat &b) {
    const std::size_t n = b.cols();
    std::vector<RatVec> star;
    std::vector<std::vector<BigRat>> mu(n, std::vector<BigRat>(n));
    auto dot = [](const RatVec &x, const RatVec &y) {
        BigRat s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += x[i] * y[i];
        return s;
    };
    for (std::size_t i = 0; i < n; ++i) {
        RatVec bi = to_rational(b.column(i));
        RatVec s = bi;
        for (std::size_t j = 0; j < i; ++j) {
            mu[i][j] = dot(bi, star[j]) / dot(star[j], star[j]);
            for (std::size_t r = 0; r < s.size(); ++r)
                s[r] -= mu[i][j] * star[j][r];
            EXPECT_LE(abs(mu[i][j]), BigRat(1, 2));
        }
        star.push_back(s);
    }
    for (std::size_t i = 1; i < n; ++i)
        EXPECT_GE(dot(star[i], star[i]),
                  (BigRat(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * dot(star[i - 1], star[i - 1]));
}

} // namespace

TEST(Lll, IdentityStaysReduced) {
    const IntMat r = lll_reduce(IntMat::identity(2));
    expect_same_lattice(IntMat::identity(2), r);
    for (std::size_t j = 0; j < 2; ++j) {
        BigInt norm = 0;
        for (const auto &x : r.column(j))
            norm += x * x;
        EXPECT_EQ(norm, 1);
    }
}

TEST(Lll, SkewedBasis) {
    const IntMat b = rows({{1, 100}, {0, 1}});
    const IntMat r = lll_reduce(b);
    expect_same_lattice(b, r);
    expect_lll_reduced(r);
    for (std::size_t j = 0; j < 2; ++j)
        for (const auto &x : r.column(j))
            EXPECT_LE(abs(x), 1);
}

TEST(Lll, NearlyParallelBasis) {
    const IntMat b = rows({{201, 1}, {200, 1}});
    const IntMat r = lll_reduce(b);
    expect_same_lattice(b, r);
    expect_lll_reduced(r);
    // Exhaustive search: the shortest nonzero vector has squared norm ≤ 2.
    BigInt best = -1;
    for (long c1 = -5; c1 <= 5; ++c1)
        for (long c2 = -5; c2 <= 5; ++c2) {
            if (c1 == 0 && c2 == 0)
                continue;
            const BigInt x = r(0, 0) * c1 + r(0, 1) * c2, y = r(1, 0) * c1 + r(1, 1) * c2;
            const BigInt n2 = x * x + y * y;
            if (best < 0 || n2 < best)
                best = n2;
        }
    EXPECT_LE(best, 2);
    BigInt first = r(0, 0) * r(0, 0) + r(1, 0) * r(1, 0);
    EXPECT_LE(first, 2);
}

TEST(Lll, RandomBasesWithScale) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<long> scale(1, 7);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = dim(rng);
        const IntMat b = random_matrix(rng, n, n, 40);
        if (det(b) == 0)
            continue;
        const IntMat r = lll_reduce(b, scale(rng));
        expect_same_lattice(b, r);
        expect_lll_reduced(r);
    }
}

TEST(Lll, RejectsDependentColumns) {
    EXPECT_THROW(lll_reduce(rows({{1, 2}, {2, 4}})), Error);
}
