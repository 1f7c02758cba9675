#include <doctest.h>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/numbers.hpp"

using namespace coxshuffle;

namespace {

using SF = ShuffleFamily;

AlgebraElement one(SF f, int n) { return AlgebraElement::identity(info(f).complex, n); }

const SF kAdditive[] = {SF::SideA, SF::TwoSidedA, SF::SideB, SF::SideD};
const SF kAll[] = {SF::SideA, SF::TwoSidedA, SF::RiffleA, SF::SideB, SF::RiffleB, SF::SideD, SF::RiffleD};

}  // namespace

TEST_CASE("element arithmetic") {
  auto e = AlgebraElement::identity(Family::A, 3);
  auto s1 = sigma(SF::SideA, 3, 1);
  CHECK(e * s1 == s1);
  CHECK(s1 * e == s1);
  CHECK((s1 - s1).is_zero());
  CHECK((s1 * Rational(0)).is_zero());
  CHECK((s1 + s1) == Rational(2) * s1);
  CHECK(s1.size() == 3);
  auto f = Face::parse(Family::A, 3, "({2}|{1,3})");
  CHECK(AlgebraElement::of_face(f, Rational(2, 2)) == AlgebraElement::of_face(f));
  CHECK_THROWS_AS(s1 + sigma(SF::SideB, 3, 1), std::invalid_argument);
}

TEST_CASE("small products from the definitions") {
  auto s1 = sigma(SF::SideA, 3, 1);
  CHECK(s1 * s1 == s1 + sigma(SF::SideA, 3, 2));
  for (int n = 2; n <= 4; ++n) {
    auto b1 = sigma(SF::SideB, n, 1);
    CHECK(b1 * b1 == Rational(2) * b1 + sigma(SF::SideB, n, 2));
  }
}

TEST_CASE("sigma_J and sigma_j") {
  CHECK(sigma_J(FaceType::parse(Family::A, 4, "{s1}")).size() == 4);
  CHECK(sigma_J(FaceType::empty(Family::A, 3)) == AlgebraElement::identity(Family::A, 3));
  auto t = sigma_J(FaceType::parse(Family::B, 2, "{t}"));
  CHECK(t.size() == 4);
  for (const auto& [f, c] : t.terms()) CHECK(f.zero_block().empty());
  CHECK(sigma(SF::SideA, 4, 2).size() == 12);
  for (int n = 2; n <= 5; ++n) {
    CHECK(sigma(SF::SideD, n, n) == Rational(2) * sigma(SF::SideD, n, n - 1));
    CHECK(sigma(SF::SideA, n, n) == sigma(SF::SideA, n, n - 1));
    CHECK(sigma(SF::TwoSidedA, n, n) == Rational(2) * sigma(SF::TwoSidedA, n, n - 1));
  }
  auto expect = sigma_J(FaceType::parse(Family::D, 3, "{s1,u}")) + sigma_J(FaceType::parse(Family::D, 3, "{s1,v}")) +
                Rational(2) * sigma_J(FaceType::parse(Family::D, 3, "{u,v}"));
  CHECK(sigma(SF::RiffleD, 3, 2) == expect);
  CHECK(sigma(SF::RiffleD, 3, 3) == Rational(2) * sigma_J(FaceType::full(Family::D, 3)));
  auto odd1 = sigma_J(FaceType::parse(Family::D, 4, "{u}")) + sigma_J(FaceType::parse(Family::D, 4, "{v}")) +
              sigma_J(FaceType::parse(Family::D, 4, "{s1}")) + sigma_J(FaceType::parse(Family::D, 4, "{s2}")) +
              sigma_J(FaceType::parse(Family::D, 4, "{u,v}"));
  CHECK(sigma(SF::RiffleD, 4, 1, true) == odd1);
  CHECK(sigma(SF::RiffleB, 3, 3, true) == sigma(SF::RiffleB, 3, 3));
  CHECK_THROWS_AS(sigma(SF::SideA, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(sigma(SF::SideA, 3, 1, true), std::invalid_argument);
}

TEST_CASE("two sided sigma_j matches its card description") {
  // σ_j: j cards, each split to the top pile or the bottom pile.
  for (int n = 3; n <= 5; ++n)
    for (int j = 1; j < n; ++j) {
      auto s = sigma(SF::TwoSidedA, n, j);
      Integer expect = power(2, j) * factorial(n) / factorial(n - j);
      CHECK(s.coefficient_sum() == Rational(expect));
    }
}

TEST_CASE("shuffle elements") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(shuffle(SF::RiffleA, n, 2) == sigma(SF::RiffleA, n, 1) + Rational(2) * one(SF::RiffleA, n));
    CHECK(shuffle(SF::SideA, n, 1) == sigma(SF::SideA, n, 1));
    CHECK(shuffle(SF::SideA, n, 0) == one(SF::SideA, n));
    CHECK(shuffle(SF::RiffleB, n, 2) == sigma(SF::RiffleB, n, 1));
    CHECK(sigma(SF::RiffleB, n, 1) == sigma_J(FaceType::parse(Family::B, n, "{t}")));
    CHECK(shuffle(SF::RiffleB, n, 1) == one(SF::RiffleB, n));
    CHECK(shuffle(SF::RiffleD, n, 1) == one(SF::RiffleD, n));
  }
  CHECK_THROWS_AS(shuffle(SF::RiffleA, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(shuffle(SF::SideA, 3, -1), std::invalid_argument);
}

TEST_CASE("normalization factors") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(sigma(SF::SideA, n, 1).coefficient_sum() == n);
    CHECK(sigma(SF::SideA, n, n).coefficient_sum() == Rational(factorial(n)));
    CHECK(sigma(SF::SideB, n, 1).coefficient_sum() == 2 * n);
    // weak partitions: a^n for riffleA, a^n for riffleB/D decks
    for (long a = 1; a <= 5; ++a) {
      CHECK(shuffle(SF::RiffleA, n, a).coefficient_sum() == Rational(power(a, n)));
      CHECK(shuffle(SF::RiffleB, n, a).coefficient_sum() == Rational(power(a, n)));
      CHECK(shuffle(SF::RiffleD, n, a).coefficient_sum() == Rational(power(a, n)));
      CHECK(shuffle(SF::SideB, n, a).coefficient_sum() == Rational(power(2 * n, a)));
      CHECK(shuffle(SF::SideA, n, a).coefficient_sum() == Rational(power(n, a)));
    }
  }
}

TEST_CASE("invariant route agrees with the direct route") {
  for (auto f : kAll)
    for (int n = 2; n <= 4; ++n) {
      auto x = shuffle(f, n, 3), y = shuffle(f, n, 2) + sigma(f, n, 1);
      auto direct = multiply(x, y, ProductRoute::Direct);
      CHECK(multiply(x, y, ProductRoute::Invariant) == direct);
      CHECK(direct.coefficient_sum() == x.coefficient_sum() * y.coefficient_sum());
    }
  // non-invariant factors fall back to the direct route
  auto x = AlgebraElement::of_face(Face::parse(Family::B, 3, "({2}|Z:{1,3})"), Rational(1, 3));
  auto y = sigma(SF::SideB, 3, 2);
  CHECK(multiply(x, y) == multiply(x, y, ProductRoute::Direct));
  CHECK_THROWS_AS(multiply(x, y, ProductRoute::Invariant), std::invalid_argument);
  CHECK(!invariant_coordinates(x));
  CHECK(invariant_coordinates(y));
}

TEST_CASE("structure constants reproduce σ_1 squared") {
  const auto& s = InvariantStructure::get(Family::A, 3);
  // σ_{s1} σ_{s1} = σ_{s1} + σ_{s1,s2}
  CHECK(s.constant(1, 1, 1) == 1);
  CHECK(s.constant(1, 1, 3) == 1);
  CHECK(s.constant(1, 1, 0) == 0);
}

TEST_CASE("additive semigroup law") {
  for (auto f : kAdditive)
    for (int n = 2; n <= 4; ++n)
      for (long a = 0; a <= 6; ++a)
        for (long b = 0; a + b <= 6; ++b) CHECK(shuffle(f, n, a) * shuffle(f, n, b) == shuffle(f, n, a + b));
}

TEST_CASE("multiplicative semigroup law") {
  for (auto f : {SF::RiffleA, SF::RiffleB, SF::RiffleD})
    for (int n = 2; n <= 3; ++n)
      for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b) CHECK(shuffle(f, n, a) * shuffle(f, n, b) == shuffle(f, n, a * b));
}

TEST_CASE("recurrence laws") {
  for (int n = 2; n <= 5; ++n) {
    auto check = [&](SF f, Rational step, int last) {
      auto s1 = sigma(f, n, 1);
      for (int j = 1; j < last; ++j) {
        auto s = sigma(f, n, j);
        CHECK(s * s1 == step * j * s + sigma(f, n, j + 1));
      }
      auto s = sigma(f, n, last);
      CHECK(s * s1 == step * n * s);
    };
    check(SF::SideA, 1, n - 1);
    check(SF::TwoSidedA, 2, n - 1);
    check(SF::SideD, 2, n - 1);
    check(SF::SideB, 2, n);
  }
}

TEST_CASE("side shuffle product formula") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; i + j <= n - 1; ++j) {
        AlgebraElement rhs(Family::A, n);
        for (int k = 0; k <= std::min(i, j); ++k)
          rhs += Rational(factorial(k) * binomial(i, k) * binomial(j, k)) * sigma(SF::SideA, n, i + j - k);
        CHECK(sigma(SF::SideA, n, i) * sigma(SF::SideA, n, j) == rhs);
      }
}

TEST_CASE("falling factorial identities") {
  for (int n = 2; n <= 5; ++n) {
    for (auto [f, step] : {std::pair{SF::SideA, 1}, {SF::TwoSidedA, 2}, {SF::SideB, 2}, {SF::SideD, 2}}) {
      auto s1 = sigma(f, n, 1);
      auto prod = s1;
      int top = f == SF::SideB ? n : n - 1;
      for (int j = 1; j < top; ++j) {
        prod = prod * shift(s1, step * j);
        CHECK(prod == sigma(f, n, j + 1));
      }
    }
  }
}

TEST_CASE("closed-form idempotents") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(idempotent(SF::SideA, n, n - 1).is_zero());
    CHECK(idempotent(SF::TwoSidedA, n, n - 1).is_zero());
    CHECK(idempotent(SF::SideD, n, n - 1).is_zero());
    CHECK_FALSE(idempotent(SF::SideB, n, n - 1).is_zero());
    for (auto f : {SF::RiffleB, SF::RiffleD}) {
      auto en = idempotent(f, n, n);
      CHECK(idempotent(f, n, n, true) == en);
      CHECK(en == make_rational(1, power(2, n) * factorial(n)) * sigma(f, n, n));
      CHECK(idempotent(f, n, 0).is_zero());
    }
  }
}

TEST_CASE("idempotent systems are complete and orthogonal") {
  for (auto f : kAll)
    for (int n = 2; n <= 4; ++n) {
      auto sys = idempotents(f, n);
      AlgebraElement total(info(f).complex, n);
      for (std::size_t i = 0; i < sys.size(); ++i) {
        total += sys[i].element;
        CHECK_FALSE(sys[i].element.is_zero());
        for (std::size_t j = 0; j < sys.size(); ++j) {
          auto p = sys[i].element * sys[j].element;
          if (i == j) CHECK(p == sys[i].element);
          else CHECK(p.is_zero());
        }
      }
      CHECK(total == one(f, n));
    }
}

TEST_CASE("character decomposition") {
  for (auto f : kAll)
    for (int n = 2; n <= 4; ++n) {
      auto sys = idempotents(f, n);
      long first = valid_shuffle_index(f, 0) ? 0 : 1;
      for (long a = first; a <= 5; ++a) {
        AlgebraElement rhs(info(f).complex, n);
        for (std::size_t i = 0; i < sys.size(); ++i) {
          CHECK(sys[i].character.value(a) == character_value(f, n, i, a));
          rhs += Rational(sys[i].character.value(a)) * sys[i].element;
        }
        CHECK(rhs == shuffle(f, n, a));
      }
    }
}

TEST_CASE("character values") {
  auto list = [](SF f, int n, long a) {
    std::vector<Integer> v;
    for (std::size_t i = 0; i < idempotents(f, n).size(); ++i) v.push_back(character_value(f, n, i, a));
    return v;
  };
  CHECK(list(SF::SideA, 4, 2) == std::vector<Integer>{0, 1, 4, 16});
  CHECK(list(SF::RiffleA, 3, 2) == std::vector<Integer>{2, 4, 8});
  CHECK(list(SF::SideB, 3, 1) == std::vector<Integer>{0, 2, 4, 6});
  CHECK(list(SF::TwoSidedA, 4, 1) == std::vector<Integer>{0, 2, 4, 8});
  CHECK(list(SF::RiffleB, 2, 2) == std::vector<Integer>{2, 4, 0, 0});
  CHECK(list(SF::RiffleB, 2, 3) == std::vector<Integer>{3, 9, 1, 3});
  CHECK(shuffle_eigenvalues(SF::RiffleB, 2, 3) == std::vector<Integer>{3, 9, 1});
  CHECK(shuffle_eigenvalues(SF::SideA, 3, 0) == std::vector<Integer>{1});
  CHECK_THROWS_AS(character_value(SF::SideA, 3, 9, 1), std::invalid_argument);
}

TEST_CASE("riffle D double collapses at rank n-1") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(sigma(SF::RiffleD, n, n - 1, true) == sigma(SF::RiffleD, n, n - 1) + Rational(1, 2) * sigma(SF::RiffleD, n, n));
    CHECK(idempotents(SF::RiffleD, n).size() == std::size_t(2 * n - 1));
    CHECK(idempotents(SF::RiffleB, n).size() == std::size_t(2 * n));
  }
}

TEST_CASE("commutativity of sigma elements") {
  for (auto f : kAll)
    for (int n = 2; n <= 4; ++n)
      for (int i = 1; i <= sigma_top(f, n); ++i)
        for (int j = i + 1; j <= sigma_top(f, n); ++j) {
          auto x = sigma(f, n, i), y = sigma(f, n, j);
          CHECK(x * y == y * x);
          if (is_riffle_double(f)) {
            auto xp = sigma(f, n, i, true);
            CHECK(xp * y == y * xp);
          }
        }
}

TEST_CASE("rank sums commute in types A and B") {
  for (auto [fam, n] : {std::pair{Family::A, 4}, {Family::B, 3}}) {
    std::vector<AlgebraElement> ranks;
    const auto& cat = FaceCatalog::get(fam, n);
    for (int r = 0; r <= label_count(fam, n); ++r) {
      AlgebraElement x(fam, n);
      for (auto t : cat.types())
        if (t.size() == r) x += sigma_J(t);
      ranks.push_back(x);
    }
    for (std::size_t i = 0; i < ranks.size(); ++i)
      for (std::size_t j = 0; j < ranks.size(); ++j) CHECK(ranks[i] * ranks[j] == ranks[j] * ranks[i]);
  }
}

TEST_CASE("shuffle algebra axioms") {
  auto r = check_shuffle_algebra_axioms(SF::SideA, 4);
  CHECK(r.all_passed());
  CHECK(r.dimension == 4);
  for (auto f : {SF::TwoSidedA, SF::RiffleA, SF::SideB})
    for (int n = 2; n <= 4; ++n) CHECK(check_shuffle_algebra_axioms(f, n).all_passed());
  for (auto f : {SF::RiffleB, SF::RiffleD}) {
    auto d = check_shuffle_algebra_axioms(f, 3);
    // D: σ'_{n-1} = σ_{n-1} + σ_n/2 collapses one dimension
    CHECK(d.dimension == (f == SF::RiffleB ? 6 : 5));
    CHECK_FALSE(d.passed(1));
    CHECK_FALSE(d.passed(2));
    CHECK_FALSE(d.passed(3));
    CHECK(d.passed(4));
    CHECK(check_shuffle_algebra_axioms(f, 3, AlgebraPart::Even).all_passed());
  }
  CHECK(check_shuffle_algebra_axioms(SF::RiffleB, 3, AlgebraPart::Odd).all_passed());
  auto odd = check_shuffle_algebra_axioms(SF::RiffleD, 3, AlgebraPart::Odd);
  CHECK_FALSE(odd.passed(2));
  CHECK(odd.passed(1));
  CHECK(odd.passed(3));
  CHECK(odd.passed(4));
  CHECK(parse_algebra_id("riffleD-odd") == std::pair{SF::RiffleD, AlgebraPart::Odd});
  CHECK_THROWS_AS(parse_algebra_id("sideA-odd"), std::invalid_argument);
}

TEST_CASE("side D sigma_{n-1} is a chamber sum") {
  // σ_{n-1} lives in rank n, so no element of A has rank n-1.
  auto r = check_shuffle_algebra_axioms(SF::SideD, 4);
  CHECK(r.passed(1));
  CHECK_FALSE(r.passed(2));
  CHECK(r.passed(3));
  CHECK(r.passed(4));
}
