#include "polyomega/exactmath.hpp"

#include "polyomega/error.hpp"

#include <utility>

namespace polyomega {

BigInt content(const IntVec &v) {
    BigInt g = 0;
    for (const auto &x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVec prim(const IntVec &v) {
    const BigInt g = content(v);
    if (g == 0)
        throw Error("zero vector has no primitive form");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

BigInt det(const IntMat &v) {
    if (!v.square())
        throw DimensionError("determinant of a non-square " + std::to_string(v.rows()) + "x" +
                             std::to_string(v.cols()) + " matrix");
    const std::size_t n = v.rows();
    if (n == 0)
        return 1;
    IntMat m = v;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMat &v) {
    IntMat m = v;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                BigInt t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::optional<RatVec> solve_rational(const IntMat &v, const RatVec &x) {
    if (x.size() != v.rows())
        throw DimensionError("solve_rational: right-hand side of length " +
                             std::to_string(x.size()) + " for " + std::to_string(v.rows()) +
                             " rows");
    const std::size_t n = v.rows();
    const std::size_t k = v.cols();
    RatMat a(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a(i, j) = v(i, j);
        a(i, k) = x[i];
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw Error("generators not linearly independent");
        a.swap_rows(c, p);
        const BigRat pivot = a(c, c);
        for (std::size_t j = c; j <= k; ++j)
            a(c, j) /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            const BigRat f = a(i, c);
            for (std::size_t j = c; j <= k; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    for (std::size_t i = k; i < n; ++i)
        if (a(i, k) != 0)
            return std::nullopt;
    RatVec lambda(k);
    for (std::size_t c = 0; c < k; ++c)
        lambda[c] = a(c, k);
    return lambda;
}

RatMat inverse(const IntMat &v) {
    if (!v.square())
        throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = v.rows();
    RatMat out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n);
        e[j] = 1;
        auto col = solve_rational(v, e);
        out.set_column(j, *col);
    }
    return out;
}

IntMat adjugate(const IntMat &v) {
    const BigInt d = det(v);
    if (d == 0)
        throw Error("adjugate of a singular matrix is not supported");
    const RatMat inv = inverse(v);
    IntMat out(v.rows(), v.cols());
    for (std::size_t c = 0; c < v.cols(); ++c)
        for (std::size_t r = 0; r < v.rows(); ++r) {
            BigRat e = inv(r, c) * d;
            if (!is_integer(e))
                throw InternalError("adjugate entry is not integral");
            out(r, c) = e.get_num();
        }
    return out;
}

} // namespace polyomega
