#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gext {

// Exact coefficients. mpq_class keeps values canonical (den > 0, reduced)
// after every arithmetic operation.
using Rational = mpq_class;

// "3", "-1/2", "0".
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional sign; reduces. Throws DomainError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

} // namespace gext
