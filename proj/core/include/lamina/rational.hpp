#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lamina {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" (q > 0 after canonicalization).  Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

bool is_integer(const Rational& q);

// Exact rational square root of q >= 0, or nullopt if q is not a square in Q.
std::optional<Rational> exact_sqrt(const Rational& q);

// gcd on Q: the positive generator of aZ + bZ (gcd(0,0) = 0).
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace lamina
