#pragma once

#include <gmpxx.h>

#include <string>

namespace hopfkit {

using Integer = mpz_class;
/// Exact rational backed by GMP; mpq_class keeps values canonical after
/// arithmetic, make_rational canonicalizes freshly built fractions.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace hopfkit
