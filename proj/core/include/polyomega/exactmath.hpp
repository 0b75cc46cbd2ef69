#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/matrix.hpp"

#include <cstddef>
#include <optional>

namespace polyomega {

/// Smith normal form V = U·S·W of an n×k integer matrix.
///
/// U (n×n) and W (k×k) are unimodular, S (n×k) is diagonal with
/// s_1 | s_2 | ... | s_r > 0 followed by zeros, r = rank V. The inverses of the
/// transforms are kept alongside since every consumer needs them.
struct SmithDecomposition {
    IntMat u;
    IntMat s;
    IntMat w;
    IntMat u_inv;
    IntMat w_inv;

    std::size_t rank() const;
    /// i-th diagonal entry of S.
    const BigInt &diagonal(std::size_t i) const { return s(i, i); }
};

/// Shortest integer vector that is a positive multiple of v. Throws Error on v = 0.
IntVec prim(const IntVec &v);

/// gcd of all entries, non-negative.
BigInt content(const IntVec &v);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(const IntMat &v);

std::size_t rank(const IntMat &v);

SmithDecomposition snf(const IntMat &v);

/// Unique λ with V·λ = x, or nullopt if x is not in the column span of V.
/// Throws Error when the columns of V are linearly dependent.
std::optional<RatVec> solve_rational(const IntMat &v, const RatVec &x);

/// Inverse of a square integer matrix over the rationals. Throws on singular input.
RatMat inverse(const IntMat &v);

/// Adjugate of a square matrix: adj(V)·V = det(V)·Id.
IntMat adjugate(const IntMat &v);

/// LLL reduction (δ = 3/4) of the lattice spanned by the columns of
/// (1/numerator_scale)·B. Returns integer columns in the same scaling.
IntMat lll_reduce(const IntMat &basis, const BigInt &numerator_scale = 1);

} // namespace polyomega
