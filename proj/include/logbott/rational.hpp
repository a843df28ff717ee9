#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logbott {

// Exact rational with arbitrary-precision numerator and denominator. Always
// kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
// Throws InputError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational binomial(int n, int k);
Rational power(const Rational& base, unsigned exponent);

}  // namespace logbott
