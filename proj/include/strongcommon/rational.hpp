#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strongcommon {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator (zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "num/den" or a bare integer "num". Whitespace is not accepted.
// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Serializes as "num/den"; integers keep the "/1" suffix so every value in
// a certificate has the same shape.
std::string to_string(const Rational& value);

// 2^k as a rational (k may be negative).
Rational pow2(long k);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace strongcommon
