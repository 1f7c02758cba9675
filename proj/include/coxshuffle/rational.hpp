#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxshuffle {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);
Integer power(const Integer& base, unsigned long e);

}  // namespace coxshuffle
