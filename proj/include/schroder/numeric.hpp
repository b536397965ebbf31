#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

namespace schroder {

using BigInt = mpz_class;
using Rational = mpq_class;

// 100 significant decimal digits; every constant we print is checked far
// below that.
using Real = boost::multiprecision::mpfr_float_100;

/// Parses `p`, `p/q` or a decimal literal such as `-1.25` / `1e-12` into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Real to_real(const Rational& q);
Real to_real(const BigInt& z);

/// Fixed-point decimal rendering with `digits` places after the point.
std::string format_real(const Real& x, int digits);

BigInt binomial(long n, long k);

}  // namespace schroder
