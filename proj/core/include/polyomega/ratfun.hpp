#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/cone.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyomega {

/// mult · (Σ_{u ∈ numerator} z^u) / Π_{v ∈ denominator} (1 − z^v).
struct RatFunTerm {
    BigInt mult;
    std::vector<IntVec> numerator;
    std::vector<IntVec> denominator;

    friend bool operator==(const RatFunTerm &, const RatFunTerm &) = default;
};

/// Unnormalised sum of terms.
struct RatFunExpr {
    std::size_t dimension = 0;
    std::vector<RatFunTerm> terms;

    friend bool operator==(const RatFunExpr &, const RatFunExpr &) = default;
};

enum class ConversionMethod { FundamentalParallelepiped, Barvinok };

enum class RenderFormat { Plain, Latex, Json };

struct RenderOptions {
    /// LaTeX only: write monomials as z^{(a,b)} instead of z_1^{a} z_2^{b}.
    bool vector_exponents = false;
};

/// Generating function of one cone with the parallelepiped points as numerator.
RatFunTerm cone_to_term_fp(const SymbolicCone &cone);

struct ConversionOptions {
    ConversionMethod method = ConversionMethod::FundamentalParallelepiped;
    /// Barvinok only: leaves may keep index up to this value and are enumerated directly.
    BigInt index_threshold = 1;
    std::uint64_t seed = 0;
};

RatFunExpr combination_to_ratfun(const ConeCombination &combination,
                                 const ConversionOptions &options = {});

struct CountOptions {
    /// Seeds the substitution direction and the Barvinok reference direction.
    std::uint64_t seed = 0;
};

/// Number of lattice points represented by the combination. The represented set must
/// be finite; for unbounded sets the returned value is meaningless.
BigInt count_lattice_points(const ConeCombination &combination, const CountOptions &options = {});

/// Value at z = 1 of an expression whose underlying series is a polynomial.
/// Terms are evaluated along z_i = e^{ℓ_i t} with ℓ drawn from {−7..7}^d.
BigInt evaluate_at_one(const RatFunExpr &expr, std::uint64_t seed = 0);

std::string render(const RatFunExpr &expr, RenderFormat format, const RenderOptions &options = {});

/// Inverse of render(expr, RenderFormat::Json). Throws ParseError.
RatFunExpr parse_ratfun_json(const std::string &text, std::size_t dimension = 0);

} // namespace polyomega
