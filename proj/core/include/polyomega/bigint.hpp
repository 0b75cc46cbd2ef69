#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace polyomega {

/// Arbitrary precision integer.
using BigInt = mpz_class;
/// Arbitrary precision rational, always kept canonical (lowest terms, positive denominator).
using BigRat = mpq_class;

inline BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Non-negative remainder of a modulo b, b > 0.
inline BigInt floor_mod(const BigInt &a, const BigInt &b) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt floor(const BigRat &x) { return floor_div(x.get_num(), x.get_den()); }

inline bool is_integer(const BigRat &x) { return x.get_den() == 1; }

inline int sign(const BigInt &x) { return sgn(x); }
inline int sign(const BigRat &x) { return sgn(x); }

inline BigRat make_rat(const BigInt &num, const BigInt &den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

/// Number of bits in |x|; zero for x = 0.
inline std::size_t bit_length(const BigInt &x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::string to_string(const BigInt &x) { return x.get_str(); }

inline std::string to_string(const BigRat &x) {
    return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
}

/// Parses a decimal integer with optional leading sign. Throws polyomega::ParseError.
BigInt parse_bigint(const std::string &text);

} // namespace polyomega
