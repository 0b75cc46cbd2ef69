#include "polyomega/ratfun.hpp"

#include "polyomega/barvinok.hpp"
#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include "json_util.hpp"

#include <random>
#include <sstream>

namespace polyomega {
namespace {

using Series = std::vector<BigRat>; // truncated power series in t

Series multiply(const Series &a, const Series &b) {
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1/a for a series with a[0] ≠ 0.
Series reciprocal(const Series &a) {
    Series out(a.size(), 0);
    out[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        BigRat acc = 0;
        for (std::size_t j = 1; j <= n; ++j)
            acc += a[j] * out[n - j];
        out[n] = -acc / a[0];
    }
    return out;
}

// e^{ct} and (e^{at} − 1)/(at), truncated to `len` coefficients.
Series exp_series(const BigInt &c, std::size_t len) {
    Series out(len);
    BigRat term = 1;
    for (std::size_t j = 0; j < len; ++j) {
        out[j] = term;
        term = term * c / BigRat(static_cast<unsigned long>(j + 1));
    }
    return out;
}

Series shifted_exp_series(const BigInt &a, std::size_t len) {
    Series out(len);
    BigRat term = 1; // a^j / (j+1)!
    for (std::size_t j = 0; j < len; ++j) {
        out[j] = term;
        term = term * a / BigRat(static_cast<unsigned long>(j + 2));
    }
    return out;
}

BigInt dot(const IntVec &a, const IntVec &b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Constant term in t of mult·Σ_u e^{⟨ℓ,u⟩t} / Π_i (1 − e^{⟨ℓ,v_i⟩t}).
// With 1 − e^{at} = −at·h(at), the term is (−1)^k/(Π a_i)·t^{−k}·(Σ e^{c t})/Π h(a_i t).
BigRat constant_term(const RatFunTerm &term, const IntVec &ell) {
    const std::size_t k = term.denominator.size();
    const std::size_t len = k + 1;
    Series denom(len, 0);
    denom[0] = 1;
    BigInt prod = 1;
    for (const auto &v : term.denominator) {
        const BigInt a = dot(ell, v);
        prod *= a;
        denom = multiply(denom, shifted_exp_series(a, len));
    }
    Series num(len, 0);
    for (const auto &u : term.numerator) {
        const Series e = exp_series(dot(ell, u), len);
        for (std::size_t j = 0; j < len; ++j)
            num[j] += e[j];
    }
    const Series quotient = multiply(num, reciprocal(denom));
    BigRat value = quotient[k] / BigRat(prod);
    if (k % 2 == 1)
        value = -value;
    return value * BigRat(term.mult);
}

bool admissible(const RatFunExpr &expr, const IntVec &ell) {
    for (const auto &t : expr.terms)
        for (const auto &v : t.denominator)
            if (dot(ell, v) == 0)
                return false;
    return true;
}

// ---- rendering ----

std::string plain_monomial(const IntVec &u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "z" + std::to_string(i + 1);
        if (u[i] != 1)
            out += u[i] < 0 ? "^(" + u[i].get_str() + ")" : "^" + u[i].get_str();
    }
    return out.empty() ? "1" : out;
}

std::string latex_monomial(const IntVec &u, bool vector_exponents) {
    bool zero = true;
    for (const auto &x : u)
        zero = zero && x == 0;
    if (zero)
        return "1";
    if (vector_exponents) {
        std::string out = "z^{(";
        for (std::size_t i = 0; i < u.size(); ++i)
            out += (i ? "," : "") + u[i].get_str();
        return out + ")}";
    }
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        if (!out.empty())
            out += " ";
        out += "z_{" + std::to_string(i + 1) + "}";
        if (u[i] != 1)
            out += "^{" + u[i].get_str() + "}";
    }
    return out;
}

std::string render_plain_term(const RatFunTerm &t) {
    std::string num;
    if (t.numerator.empty()) {
        num = "0";
    } else if (t.numerator.size() == 1) {
        num = plain_monomial(t.numerator[0]);
    } else {
        num = "(";
        for (std::size_t i = 0; i < t.numerator.size(); ++i)
            num += (i ? " + " : "") + plain_monomial(t.numerator[i]);
        num += ")";
    }
    const BigInt m = abs(t.mult);
    std::string out = m == 1 ? num : m.get_str() + "*" + num;
    if (!t.denominator.empty()) {
        out += " / (";
        for (std::size_t i = 0; i < t.denominator.size(); ++i)
            out += (i ? "*" : "") + std::string("(1-") + plain_monomial(t.denominator[i]) + ")";
        out += ")";
    }
    return out;
}

std::string render_latex_term(const RatFunTerm &t, bool vec) {
    std::string num;
    if (t.numerator.empty())
        num = "0";
    for (std::size_t i = 0; i < t.numerator.size(); ++i)
        num += (i ? " + " : "") + latex_monomial(t.numerator[i], vec);
    const BigInt m = abs(t.mult);
    std::string prefix = m == 1 ? "" : m.get_str() + " \\cdot ";
    if (t.denominator.empty())
        return prefix + (t.numerator.size() > 1 ? "(" + num + ")" : num);
    std::string den;
    for (const auto &v : t.denominator)
        den += "(1 - " + latex_monomial(v, vec) + ")";
    return prefix + "\\frac{" + num + "}{" + den + "}";
}

nlohmann::json vectors_to_json(const std::vector<IntVec> &vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &v : vs) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto &x : v)
            row.push_back(detail::int_to_json(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

std::vector<IntVec> vectors_from_json(const nlohmann::json &j, std::size_t &dimension) {
    if (!j.is_array())
        throw ParseError("expected an array of exponent vectors");
    std::vector<IntVec> out;
    for (const auto &row : j) {
        if (!row.is_array())
            throw ParseError("expected an exponent vector");
        IntVec v;
        for (const auto &x : row)
            v.push_back(detail::int_from_json(x));
        if (dimension == 0)
            dimension = v.size();
        else if (v.size() != dimension)
            throw DimensionError("exponent vector of length " + std::to_string(v.size()) +
                                 ", expected " + std::to_string(dimension));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

RatFunTerm cone_to_term_fp(const SymbolicCone &cone) {
    RatFunTerm t;
    t.mult = 1;
    t.numerator = enum_fundpar(cone);
    for (std::size_t j = 0; j < cone.num_generators(); ++j)
        t.denominator.push_back(cone.generator(j));
    return t;
}

RatFunExpr combination_to_ratfun(const ConeCombination &combination,
                                 const ConversionOptions &options) {
    RatFunExpr expr;
    auto push = [&](const SymbolicCone &cone, const BigInt &mult) {
        RatFunTerm t = cone_to_term_fp(cone);
        if (t.numerator.empty())
            return; // affine hull without lattice points
        t.mult = mult;
        expr.terms.push_back(std::move(t));
    };
    for (const auto &[cone, mult] : combination) {
        expr.dimension = cone.ambient_dimension();
        if (options.method == ConversionMethod::FundamentalParallelepiped) {
            push(cone, mult);
            continue;
        }
        const ConeCombination parts =
            barvinok_decompose(cone, {options.index_threshold, options.seed});
        for (const auto &[leaf, sign] : parts)
            push(leaf, mult * sign);
    }
    return expr;
}

BigInt evaluate_at_one(const RatFunExpr &expr, std::uint64_t seed) {
    const std::size_t d = expr.dimension;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-7, 7);
    IntVec ell(d);
    constexpr int kAttempts = 10000;
    int attempt = 0;
    for (; attempt < kAttempts; ++attempt) {
        for (auto &x : ell)
            x = entry(rng);
        if (admissible(expr, ell))
            break;
    }
    if (attempt == kAttempts)
        throw InternalError("no admissible substitution direction found");
    BigRat total = 0;
    for (const auto &t : expr.terms)
        total += constant_term(t, ell);
    if (!is_integer(total))
        throw InternalError("evaluation inconsistency: non-integral total " + total.get_str());
    return total.get_num();
}

BigInt count_lattice_points(const ConeCombination &combination, const CountOptions &options) {
    for (const auto &[cone, mult] : combination)
        if (!cone.generators.square())
            throw DimensionError("counting needs full-dimensional cones");
    ConversionOptions conv;
    conv.method = ConversionMethod::Barvinok;
    conv.seed = options.seed;
    return evaluate_at_one(combination_to_ratfun(combination, conv), options.seed);
}

std::string render(const RatFunExpr &expr, RenderFormat format, const RenderOptions &options) {
    if (format == RenderFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &t : expr.terms)
            arr.push_back({{"mult", t.mult.get_str()},
                           {"num", vectors_to_json(t.numerator)},
                           {"den", vectors_to_json(t.denominator)}});
        return arr.dump();
    }
    if (expr.terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < expr.terms.size(); ++i) {
        const RatFunTerm &t = expr.terms[i];
        const bool neg = t.mult < 0;
        if (i == 0)
            out += neg ? "- " : "";
        else
            out += neg ? " - " : " + ";
        out += format == RenderFormat::Plain ? render_plain_term(t)
                                             : render_latex_term(t, options.vector_exponents);
    }
    return out;
}

RatFunExpr parse_ratfun_json(const std::string &text, std::size_t dimension) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError("expected an array of terms");
    RatFunExpr expr;
    for (const auto &term : j) {
        if (!term.is_object() || !term.contains("mult") || !term.contains("num") ||
            !term.contains("den"))
            throw ParseError("term needs the fields mult, num and den");
        RatFunTerm t;
        t.mult = detail::int_from_json(term["mult"]);
        t.numerator = vectors_from_json(term["num"], dimension);
        t.denominator = vectors_from_json(term["den"], dimension);
        expr.terms.push_back(std::move(t));
    }
    expr.dimension = dimension;
    return expr;
}

} // namespace polyomega
