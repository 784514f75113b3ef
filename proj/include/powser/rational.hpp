#pragma once

#include <gmpxx.h>

#include <string>

namespace powser {

// Exact arbitrary-precision rational coefficient. mpq_class keeps values
// canonical (gcd-reduced, positive denominator) through arithmetic.
using Rational = mpq_class;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace powser
