#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfoid {

/// Exact rational scalar. GMP keeps it canonical: gcd(|p|, q) = 1, q > 0.
using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" (also accepts the unicode minus U+2212).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when q = 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace hopfoid
