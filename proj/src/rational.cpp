#include "coxshuffle/rational.hpp"

#include <stdexcept>

namespace coxshuffle {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace coxshuffle
