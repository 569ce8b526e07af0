#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace copgeo {

/// Exact arbitrary-precision rational. All exact geometry in the library is
/// carried out in this type.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal (optionally with an
/// exponent) into an exact rational. "0.1" yields exactly 1/10.
/// Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite binary64 value.
Rational rational_from_double(double value);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Largest integer not exceeding q.
mpz_class floor(const Rational& q);

/// Smallest integer not below q.
mpz_class ceil(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace copgeo
