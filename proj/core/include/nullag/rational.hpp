#pragma once

#include <gmpxx.h>

#include <string>

namespace nullag {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps every result of arithmetic in lowest terms
/// with a positive denominator; values built from a numerator/denominator pair
/// must go through make_rational.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& r) {
    return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

}  // namespace nullag
