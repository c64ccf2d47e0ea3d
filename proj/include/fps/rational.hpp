#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fps {

/// Arbitrary-precision rational in canonical form: reduced, positive
/// denominator, zero stored as 0/1. mpq_class maintains exactly this
/// form once canonicalized, so equality of values is equality of
/// representations.
using Rational = mpq_class;

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Parses "p" or "p/q" (decimal, optional leading '-').
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// |q|^(1/k) as a double. Goes through mantissa/exponent pairs so values
/// far outside double range still give a finite root.
double root_magnitude(const Rational& q, int k);

} // namespace fps
