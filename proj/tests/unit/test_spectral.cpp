#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "coxshuffle/spectral.hpp"

using namespace coxshuffle;
using SF = ShuffleFamily;

namespace {

const SF kAll[] = {SF::SideA, SF::TwoSidedA, SF::RiffleA, SF::SideB, SF::RiffleB, SF::SideD, SF::RiffleD};

linalg::Matrix identity_matrix(std::size_t n) {
  linalg::Matrix m(n, linalg::Vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_zero(const linalg::Matrix& m) {
  for (const auto& r : m)
    for (const auto& v : r)
      if (v != 0) return false;
  return true;
}

linalg::Matrix minus_scalar(linalg::Matrix m, long c) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= c;
  return m;
}

}  // namespace

TEST_CASE("transition operator basics") {
  auto op = transition_operator(sigma(SF::SideA, 3, 1));
  REQUIRE(op.size() == 6);
  for (std::size_t c = 0; c < 6; ++c) {
    Rational col;
    for (std::size_t r = 0; r < 6; ++r) col += op.matrix[r][c];
    CHECK(col == 3);
  }
  CHECK(transition_operator(AlgebraElement::identity(Family::B, 2)).matrix == identity_matrix(8));

  const auto& cat = FaceCatalog::get(Family::D, 3);
  auto c = cat.chambers()[5];
  auto m = transition_operator(AlgebraElement::of_face(c)).matrix;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i][j] == (i == 5 ? 1 : 0));
}

TEST_CASE("random to top moves one card") {
  // ({2}|{1,3,4}) acting on the deck 1234 puts card 2 on top
  auto x = AlgebraElement::of_face(Face::parse(Family::A, 4, "({2}|{1,3,4})"));
  auto deck = Face::from_deck(Family::A, std::vector<int>{1, 2, 3, 4});
  auto op = transition_operator(x);
  const auto& cat = FaceCatalog::get(Family::A, 4);
  auto to = cat.chamber_index(Face::from_deck(Family::A, std::vector<int>{2, 1, 3, 4}));
  CHECK(op.matrix[to][cat.chamber_index(deck)] == 1);
}

TEST_CASE("operator is a homomorphism") {
  for (auto [fam, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::D, 3}}) {
    const auto& cat = FaceCatalog::get(fam, n);
    std::vector<AlgebraElement> xs;
    for (std::size_t i = 0; i < cat.faces().size(); i += 7) {
      AlgebraElement x(fam, n);
      x.add_term(cat.faces()[i], Rational(int(i % 5) + 1, 3));
      x.add_term(cat.faces()[(i * 13 + 1) % cat.faces().size()], Rational(-2));
      xs.push_back(x);
    }
    for (std::size_t i = 0; i + 1 < xs.size() && i < 12; ++i) {
      const auto& x = xs[i];
      const auto& y = xs[xs.size() - 1 - i];
      CHECK(transition_operator(x * y).matrix ==
            matmul(transition_operator(x).matrix, transition_operator(y).matrix));
    }
  }
}

TEST_CASE("operator map is faithful on invariant elements") {
  for (auto [fam, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::D, 3}, {Family::A, 3}, {Family::B, 2}}) {
    const auto& cat = FaceCatalog::get(fam, n);
    linalg::Matrix rows;
    for (auto t : cat.types()) {
      auto m = transition_operator(sigma_J(t)).matrix;
      linalg::Vector flat;
      for (auto& r : m) flat.insert(flat.end(), r.begin(), r.end());
      rows.push_back(std::move(flat));
    }
    CHECK(linalg::rank(rows) == cat.types().size());
  }
}

TEST_CASE("normalized shuffle operators are stochastic") {
  for (auto f : kAll)
    for (int n = 2; n <= 3; ++n)
      for (long a = 1; a <= 4; ++a) {
        auto m = transition_operator(shuffle(f, n, a)).normalized();
        for (std::size_t c = 0; c < m.size(); ++c) {
          Rational col, row;
          for (std::size_t r = 0; r < m.size(); ++r) {
            col += m[r][c];
            row += m[c][r];
            CHECK(m[r][c] >= 0);
          }
          CHECK(col == 1);
          CHECK(row == 1);  // uniform is stationary
        }
      }
}

TEST_CASE("cited minimal polynomials annihilate") {
  auto s = sigma(SF::SideA, 3, 1);
  CHECK((s * shift(s, 1) * shift(s, 3)).is_zero());
  CHECK_FALSE((s * shift(s, 1)).is_zero());
  auto m = transition_operator(shuffle(SF::RiffleA, 3, 2)).matrix;
  CHECK(is_zero(matmul(matmul(minus_scalar(m, 2), minus_scalar(m, 4)), minus_scalar(m, 8))));
  auto two = sigma(SF::TwoSidedA, 4, 1);
  CHECK((two * shift(two, 2) * shift(two, 4) * shift(two, 8)).is_zero());
}

TEST_CASE("minimal polynomial reports") {
  for (auto f : kAll)
    for (int n = 2; n <= 3; ++n)
      for (long a = valid_shuffle_index(f, 0) ? 0 : 1; a <= 4; ++a) {
        auto r = verify_minimal_polynomial(f, n, a);
        CAPTURE(to_string(f));
        CAPTURE(n);
        CAPTURE(a);
        CHECK(r.annihilation);
        CHECK(r.minimal);
        CHECK(r.redundant.empty());
        CHECK(r.ranks_agree);
        Integer total = std::accumulate(r.multiplicities.begin(), r.multiplicities.end(), Integer(0));
        CHECK(total == Integer(static_cast<unsigned long>(r.chambers)));
        for (const auto& m : r.multiplicities) CHECK(m >= 0);
      }
  auto b = verify_minimal_polynomial(SF::SideB, 2, 1);
  CHECK(b.eigenvalues == std::vector<Integer>{0, 2, 4});
  auto r = verify_minimal_polynomial(SF::RiffleA, 4, 2);
  CHECK(r.eigenvalues == std::vector<Integer>{2, 4, 8, 16});
}

TEST_CASE("random to top multiplicities count fixed points") {
  // eigenvalue j of σ_1 has multiplicity #{permutations with j fixed points}
  for (int n = 2; n <= 5; ++n) {
    std::vector<long> fixed(n + 1);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      int k = 0;
      for (int i = 0; i < n; ++i) k += p[i] == i;
      ++fixed[k];
    } while (std::next_permutation(p.begin(), p.end()));
    auto r = verify_minimal_polynomial(SF::SideA, n, 1);
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      CHECK(r.multiplicities[i] == fixed[r.eigenvalues[i].get_si()]);
  }
}

TEST_CASE("stirling identities from minimal polynomials") {
  CHECK(stirling_identity_check(SF::SideA, 3, 2));
  CHECK(stirling_identity_check(SF::SideA, 4, 1));
  CHECK(stirling_identity_check(SF::TwoSidedA, 3, 2));
  for (auto f : {SF::SideA, SF::TwoSidedA, SF::SideB, SF::SideD, SF::RiffleA})
    for (int n = 2; n <= 7; ++n)
      for (long a = 1; a <= 4; ++a) CHECK(stirling_identity_check(f, n, a));
  CHECK_THROWS_AS(stirling_identity_check(SF::RiffleB, 3, 2), std::invalid_argument);
}

TEST_CASE("matrix csv") {
  linalg::Matrix m{{Rational(1, 2), Rational(0)}, {Rational(-3), Rational(1, 3)}};
  CHECK(matrix_csv(m) == "1/2,0/1\n-3/1,1/3\n");
}
