#pragma once

#include <gmpxx.h>

#include <string>

namespace ramsey {

/// Exact rational, always canonical after every operation.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational rat(long num, long den = 1);

/// "num/den"; integers are written with denominator 1 so consumers see one shape.
std::string to_string(const Rational& q);
/// Accepts "a/b", integers, and finite decimals such as "0.25" or "1e-3" (read exactly).
Rational parse_rational(const std::string& text);
double to_double(const Rational& q);
/// log10 |q| without materialising a double; valid for any nonzero size.
double log10_abs(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
/// Number of bits in numerator plus denominator; used to decide when to summarise.
std::size_t bit_size(const Rational& q);

}  // namespace ramsey
