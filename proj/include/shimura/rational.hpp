#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shimura {

/// Arbitrary-precision rational, always kept canonical (lowest terms, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a/b", "-3", "+7/2". Floats are rejected.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& value);

inline Rational rational_power(const Rational& base, unsigned exponent)
{
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace shimura
