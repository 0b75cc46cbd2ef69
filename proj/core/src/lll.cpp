#include "polyomega/exactmath.hpp"

#include "polyomega/error.hpp"

#include <vector>

namespace polyomega {
namespace {

BigRat dot(const IntVec &a, const RatVec &b) {
    BigRat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

BigRat dot(const RatVec &a, const RatVec &b) {
    BigRat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

BigInt round_nearest(const BigRat &x) { return floor(x + BigRat(1, 2)); }

// Exact Gram-Schmidt data of the basis: mu(i, j) for j < i and squared norms of b*_i.
struct GramSchmidt {
    std::vector<std::vector<BigRat>> mu;
    std::vector<BigRat> norm2;
};

GramSchmidt orthogonalize(const std::vector<IntVec> &b) {
    const std::size_t k = b.size();
    GramSchmidt gs{std::vector<std::vector<BigRat>>(k, std::vector<BigRat>(k)),
                   std::vector<BigRat>(k)};
    std::vector<RatVec> star(k);
    for (std::size_t i = 0; i < k; ++i) {
        star[i] = to_rational(b[i]);
        for (std::size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = dot(b[i], star[j]) / gs.norm2[j];
            for (std::size_t t = 0; t < star[i].size(); ++t)
                star[i][t] -= gs.mu[i][j] * star[j][t];
        }
        gs.norm2[i] = dot(star[i], star[i]);
        if (gs.norm2[i] == 0)
            throw Error("lll_reduce: basis vectors are linearly dependent");
    }
    return gs;
}

} // namespace

IntMat lll_reduce(const IntMat &basis, const BigInt &numerator_scale) {
    if (numerator_scale <= 0)
        throw Error("lll_reduce: numerator_scale must be positive");
    // Reducedness is invariant under uniform scaling, so the integer columns are
    // reduced directly; the caller keeps interpreting them as (1/scale)·columns.
    const BigRat delta(3, 4);
    std::vector<IntVec> b;
    for (std::size_t j = 0; j < basis.cols(); ++j)
        b.push_back(basis.column(j));
    if (b.empty())
        return basis;

    GramSchmidt gs = orthogonalize(b);
    std::size_t k = 1;
    while (k < b.size()) {
        for (std::size_t jj = k; jj-- > 0;) {
            const BigInt r = round_nearest(gs.mu[k][jj]);
            if (r == 0)
                continue;
            for (std::size_t t = 0; t < b[k].size(); ++t)
                b[k][t] -= r * b[jj][t];
            gs = orthogonalize(b);
        }
        const BigRat lhs = gs.norm2[k];
        const BigRat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gs = orthogonalize(b);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return IntMat::from_columns(b, basis.rows());
}

} // namespace polyomega
