#include <doctest.h>

#include "coxshuffle/numbers.hpp"

using namespace coxshuffle;

TEST_CASE("stirling2 boundary values") {
  CHECK(stirling2(0, 0) == 1);
  for (unsigned a = 1; a <= 6; ++a) CHECK(stirling2(a, 0) == 0);
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned j = a + 1; j <= 8; ++j) CHECK(stirling2(a, j) == 0);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(10, 4) == 34105);
}

TEST_CASE("signed stirling values") {
  for (unsigned a = 1; a <= 10; ++a) {
    CHECK(signed_stirling(a, 1) == power(2, a - 1));
    CHECK(signed_stirling(a, a) == 1);
  }
  CHECK(signed_stirling(3, 2) == 6);
  for (unsigned a = 0; a <= 10; ++a)
    for (unsigned j = 0; j <= a; ++j) CHECK(signed_stirling(a, j) == power(2, a - j) * stirling2(a, j));
}

TEST_CASE("recursions agree with alternating sums") {
  for (unsigned a = 0; a <= 10; ++a)
    for (unsigned j = 0; j <= 10; ++j) {
      CHECK(stirling2(a, j) == stirling2_explicit(a, j));
      CHECK(signed_stirling(a, j) == signed_stirling_explicit(a, j));
    }
}

TEST_CASE("q numbers") {
  CHECK(q_number(3, 2) == 7);
  CHECK(q_number(0, 5) == 0);
  CHECK(q_number(4, 2) == 15);
  CHECK(q_number(5, 1) == 5);
  CHECK_THROWS_AS(q_number(2, 0), std::invalid_argument);
}

TEST_CASE("q stirling") {
  CHECK(q_stirling(StirlingKind::QA, 3, 3, 2) == 8);
  for (unsigned a = 1; a <= 8; ++a) {
    CHECK(q_stirling(StirlingKind::QA, a, 1, 3) == 1);
    CHECK(q_stirling(StirlingKind::QA, a, a, 3) == power(3, a * (a - 1) / 2));
  }
  CHECK(q_stirling(StirlingKind::QSymplectic, 2, 1, 2, 2) == 9);
  for (unsigned a = 1; a <= 6; ++a) {
    CHECK(q_stirling(StirlingKind::QSymplectic, a, 1, 2, 3) == power(1 + power(2, 5), a - 1));
    CHECK(q_stirling(StirlingKind::QOrthogonal, a, 1, 3, 3) == power(1 + power(3, 4), a - 1));
  }
  for (unsigned a = 1; a <= 3; ++a) {
    CHECK(q_stirling(StirlingKind::QSymplectic, a, a, 2, 3) == power(2, a * (a - 1) / 2));
    CHECK(q_stirling(StirlingKind::QOrthogonal, a, a, 3, 3) == power(3, a * (a - 1) / 2));
  }
  CHECK_THROWS_AS(q_stirling(StirlingKind::QSymplectic, 5, 4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_stirling_kind("bogus"), std::invalid_argument);
}

TEST_CASE("q = 1 degenerates to the plain numbers") {
  for (unsigned a = 0; a <= 8; ++a)
    for (unsigned j = 0; j <= 8; ++j) CHECK(q_stirling(StirlingKind::QA, a, j, 1) == stirling2(a, j));
}

TEST_CASE("tables are nonnegative and vanish above the diagonal") {
  for (auto kind : {StirlingKind::Plain, StirlingKind::Signed, StirlingKind::QA}) {
    auto t = coefficient_table(kind, 12, 12, 2);
    for (unsigned a = 0; a <= 12; ++a)
      for (unsigned j = 0; j <= 12; ++j) {
        CHECK(t.at(a, j) >= 0);
        if (j > a) CHECK(t.at(a, j) == 0);
      }
  }
  auto t = coefficient_table(StirlingKind::QOrthogonal, 12, 4, 3, 4);
  for (unsigned a = 0; a <= 12; ++a)
    for (unsigned j = 0; j <= 4; ++j) CHECK(t.at(a, j) >= 0);
}

TEST_CASE("riffle coefficients") {
  CHECK(riffle_coefficients(1) == std::vector<Integer>{1});
  CHECK(riffle_coefficients(2) == std::vector<Integer>{-1, 1});
  CHECK(riffle_coefficients(3) == std::vector<Integer>{2, -3, 1});
  // a(a-1)...(a-j+1) = j! C(a,j)
  for (unsigned j = 1; j <= 6; ++j) {
    auto c = riffle_coefficients(j);
    for (long a = 0; a <= 9; ++a) {
      Integer v = 0;
      for (unsigned i = 1; i <= j; ++i) v += c[i - 1] * power(a, i);
      CHECK(v == factorial(j) * binomial(a, j));
    }
  }
}

TEST_CASE("polynomials from roots") {
  CHECK(polynomial_from_roots({}) == std::vector<Integer>{1});
  CHECK(polynomial_from_roots({1, 2}) == std::vector<Integer>{2, -3, 1});
  CHECK(shifted_falling_polynomial(2, 2, 1) == std::vector<Integer>{3, -4, 1});
}
