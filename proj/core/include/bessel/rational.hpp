#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bessel {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace bessel
