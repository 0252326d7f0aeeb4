#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace beltrami {

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. Prefer this to mpq_class(num, den), which does
// not canonicalize. Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den);

// Canonical text form: "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace beltrami
