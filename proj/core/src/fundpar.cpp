#include "polyomega/cone.hpp"

#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include <optional>

namespace polyomega {
namespace {

// a mod^o b: the usual non-negative residue, except that a residue of 0 is
// replaced by o·b so that open facets shift the point to the far side.
BigInt open_mod(const BigInt &a, const BigInt &b, bool open) {
    BigInt r = floor_mod(a, b);
    if (r == 0 && open)
        return b;
    return r;
}

// Checks membership of y in Π^o(V; q) and throws on failure.
class ParallelepipedGuard {
public:
    explicit ParallelepipedGuard(const SymbolicCone &cone) : cone_(cone) {
        if (cone.generators.square())
            inverse_ = inverse(cone.generators);
    }

    void check(const IntVec &y) const {
        RatVec diff(y.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            diff[i] = BigRat(y[i]) - cone_.apex[i];
        std::optional<RatVec> lambda;
        if (inverse_) {
            lambda = RatVec(diff.size());
            for (std::size_t r = 0; r < inverse_->rows(); ++r)
                for (std::size_t c = 0; c < inverse_->cols(); ++c)
                    (*lambda)[r] += (*inverse_)(r, c) * diff[c];
        } else {
            lambda = solve_rational(cone_.generators, diff);
        }
        if (!lambda)
            throw InternalError("enum_fundpar produced a point outside the affine hull");
        for (std::size_t j = 0; j < lambda->size(); ++j) {
            const BigRat &l = (*lambda)[j];
            const bool ok = cone_.open[j] ? (l > 0 && l <= 1) : (l >= 0 && l < 1);
            if (!ok)
                throw InternalError("enum_fundpar produced a point outside the parallelepiped");
        }
    }

private:
    const SymbolicCone &cone_;
    std::optional<RatMat> inverse_;
};

} // namespace

std::vector<IntVec> enum_fundpar(const SymbolicCone &cone) {
    const IntMat &v = cone.generators;
    const std::size_t n = cone.ambient_dimension();
    const std::size_t k = cone.num_generators();
    if (k == 0) {
        for (const auto &x : cone.apex)
            if (!is_integer(x))
                return {};
        IntVec p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = cone.apex[i].get_num();
        return {p};
    }

    const SmithDecomposition d = snf(v);
    if (d.rank() != k)
        throw Error("generators not linearly independent");

    // r = U⁻¹·q. The affine hull q + span(V) holds a lattice point iff the
    // coordinates of r beyond the first k are integral; p is then U·(0, r_{k+1..n}).
    RatVec r = apply_rational(d.u_inv, cone.apex);
    for (std::size_t i = k; i < n; ++i)
        if (!is_integer(r[i]))
            return {};
    // q̂ = U⁻¹(q − p) agrees with r on the first k coordinates and vanishes after.
    const BigInt &sk = d.diagonal(k - 1);
    std::vector<BigInt> s_prime(k);
    for (std::size_t i = 0; i < k; ++i)
        s_prime[i] = sk / d.diagonal(i);

    RatVec scaled(k);
    for (std::size_t i = 0; i < k; ++i)
        scaled[i] = -BigRat(s_prime[i]) * r[i];
    RatVec shift(k);
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t c = 0; c < k; ++c)
            shift[row] += d.w_inv(row, c) * scaled[c];

    IntVec q_int(k);
    RatVec q_frac(k);
    Openness o_eff(k);
    for (std::size_t j = 0; j < k; ++j) {
        q_int[j] = floor(shift[j]);
        q_frac[j] = shift[j] - BigRat(q_int[j]);
        o_eff[j] = q_frac[j] == 0 ? cone.open[j] : 0;
    }
    // Constant part V·q̃_frac + s_k·q, shared by all points.
    RatVec base = apply_rational(v, q_frac);
    for (std::size_t i = 0; i < n; ++i)
        base[i] += BigRat(sk) * cone.apex[i];

    ParallelepipedGuard guard(cone);
    std::vector<IntVec> points;
    IntVec lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i)
        hi[i] = d.diagonal(i) - 1;
    for_each_box_point(lo, hi, [&](const IntVec &x) {
        IntVec a(k);
        for (std::size_t row = 0; row < k; ++row) {
            BigInt acc = q_int[row];
            for (std::size_t c = 0; c < k; ++c)
                acc += d.w_inv(row, c) * s_prime[c] * x[c];
            a[row] = open_mod(acc, sk, o_eff[row] != 0);
        }
        IntVec y(n);
        for (std::size_t i = 0; i < n; ++i) {
            BigRat num = base[i];
            for (std::size_t c = 0; c < k; ++c)
                num += v(i, c) * a[c];
            num /= sk;
            if (!is_integer(num))
                throw InternalError("enum_fundpar: division by s_k is not exact");
            y[i] = num.get_num();
        }
        guard.check(y);
        points.push_back(std::move(y));
    });
    return points;
}

} // namespace polyomega
