#include "coxshuffle/numbers.hpp"

#include <stdexcept>

namespace coxshuffle {

std::string_view to_string(StirlingKind kind) {
  switch (kind) {
    case StirlingKind::Plain: return "plain";
    case StirlingKind::Signed: return "signed";
    case StirlingKind::QA: return "qA";
    case StirlingKind::QSymplectic: return "qSymplectic";
    case StirlingKind::QOrthogonal: return "qOrthogonal";
  }
  return "?";
}

StirlingKind parse_stirling_kind(std::string_view name) {
  for (auto k : {StirlingKind::Plain, StirlingKind::Signed, StirlingKind::QA,
                 StirlingKind::QSymplectic, StirlingKind::QOrthogonal}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown coefficient kind: " + std::string(name));
}

Integer q_number(unsigned j, long q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  Integer sum = 0, term = 1;
  for (unsigned i = 0; i < j; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

Integer stirling_multiplier(StirlingKind kind, unsigned j, long q, int n) {
  switch (kind) {
    case StirlingKind::Plain: return j;
    case StirlingKind::Signed: return 2 * j;
    case StirlingKind::QA: return q_number(j, q);
    case StirlingKind::QSymplectic:
    case StirlingKind::QOrthogonal: {
      if (n < 1) throw std::invalid_argument("rank n required for this kind");
      if (j > static_cast<unsigned>(n)) throw std::invalid_argument("j exceeds rank n");
      long e = 2L * n - j - (kind == StirlingKind::QOrthogonal ? 1 : 0);
      return (1 + power(q, static_cast<unsigned long>(e))) * q_number(j, q);
    }
  }
  throw std::invalid_argument("unknown coefficient kind");
}

CoefficientTable coefficient_table(StirlingKind kind, unsigned max_a, unsigned max_j, long q,
                                   int n) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  bool bounded = kind == StirlingKind::QSymplectic || kind == StirlingKind::QOrthogonal;
  if (bounded && max_j > static_cast<unsigned>(std::max(n, 0)))
    throw std::invalid_argument("j exceeds rank n");
  bool uses_q = kind == StirlingKind::QA || bounded;
  CoefficientTable t{kind, q, n, {}};
  t.values.assign(max_a + 1, std::vector<Integer>(max_j + 1, 0));
  t.values[0][0] = 1;
  std::vector<Integer> mult(max_j + 1), shift(max_j + 1);
  for (unsigned j = 1; j <= max_j; ++j) {
    mult[j] = stirling_multiplier(kind, j, q, n);
    shift[j] = uses_q ? power(q, j - 1) : Integer(1);
  }
  for (unsigned a = 1; a <= max_a; ++a) {
    for (unsigned j = 1; j <= max_j; ++j) {
      t.values[a][j] = mult[j] * t.values[a - 1][j] + shift[j] * t.values[a - 1][j - 1];
    }
  }
  return t;
}

Integer q_stirling(StirlingKind kind, unsigned a, unsigned j, long q, int n) {
  return coefficient_table(kind, a, j, q, n).at(a, j);
}

Integer stirling2(unsigned a, unsigned j) { return q_stirling(StirlingKind::Plain, a, j); }

Integer signed_stirling(unsigned a, unsigned j) { return q_stirling(StirlingKind::Signed, a, j); }

namespace {

// sum_{i=0}^{j} (-1)^(j-i) C(j,i) (scale*i)^a, with 0^0 = 1.
Integer alternating_sum(unsigned a, unsigned j, unsigned long scale) {
  Integer s = 0;
  for (unsigned i = 0; i <= j; ++i) {
    Integer term = binomial(j, i) * power(Integer(scale * i), a);
    if ((j - i) % 2) s -= term;
    else s += term;
  }
  return s;
}

}  // namespace

Integer stirling2_explicit(unsigned a, unsigned j) {
  Integer s = alternating_sum(a, j, 1);
  return s / factorial(j);
}

Integer signed_stirling_explicit(unsigned a, unsigned j) {
  Integer s = alternating_sum(a, j, 2);
  return s / (power(2, j) * factorial(j));
}

std::vector<Integer> polynomial_from_roots(const std::vector<Integer>& roots) {
  std::vector<Integer> p{1};
  for (const auto& r : roots) {
    std::vector<Integer> next(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = std::move(next);
  }
  return p;
}

std::vector<Integer> shifted_falling_polynomial(unsigned j, long step, long offset) {
  std::vector<Integer> roots;
  for (unsigned m = 0; m < j; ++m) roots.emplace_back(offset + step * static_cast<long>(m));
  return polynomial_from_roots(roots);
}

std::vector<Integer> riffle_coefficients(unsigned j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  auto p = shifted_falling_polynomial(j, 1, 0);
  return {p.begin() + 1, p.end()};
}

}  // namespace coxshuffle
