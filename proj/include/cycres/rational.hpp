#pragma once

#include <gmpxx.h>

#include <string>

namespace cycres {

// The universal scalar: arbitrary-precision signed rational.  GMP's
// mpq_class already maintains the canonical form every operation relies on
// (gcd-reduced, denominator > 0), so the alias is the type; the helpers
// below add strict parsing, exact printing and integer powers.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with arbitrary-precision parts.  Rejects
// anything else (floats, empty strings, zero denominators).  The result is
// canonical.
Rational parse_rational(const std::string& text);

// Exact decimal string for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// q^e with exact negative powers; q must be nonzero when e < 0.
Rational pow_rational(const Rational& q, long e);

Integer pow_integer(const Integer& base, unsigned long e);

Integer factorial(unsigned long n);

} // namespace cycres
