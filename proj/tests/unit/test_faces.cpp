#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "coxshuffle/faces.hpp"
#include "coxshuffle/numbers.hpp"

using namespace coxshuffle;

namespace {

Face A(int n, const char* s) { return Face::parse(Family::A, n, s); }
Face B(int n, const char* s) { return Face::parse(Family::B, n, s); }
Face D(int n, const char* s) { return Face::parse(Family::D, n, s); }

}  // namespace

TEST_CASE("type A products") {
  CHECK((A(4, "({2}|{1,3,4})") * A(4, "({1}|{2}|{3}|{4})")).to_string() == "({2}|{1}|{3}|{4})");
  CHECK((A(3, "({1,2}|{3})") * A(3, "({3}|{1}|{2})")).to_string() == "({1}|{2}|{3})");
  for (const auto& x : enumerate_faces(Family::A, 3)) CHECK(A(3, "({1,2,3})") * x == x);
}

TEST_CASE("type B products") {
  auto x = B(3, "({2}|{-3}|Z:{1})");
  auto c = B(3, "({1}|{2}|{3})");
  CHECK((x * c).to_string() == "({2}|{-3}|{1})");
  CHECK(Face::identity(Family::B, 3).to_string() == "(Z:{1,2,3})");
  for (const auto& y : enumerate_faces(Family::B, 3)) {
    CHECK(Face::identity(Family::B, 3) * y == y);
    CHECK(c * y == c);
  }
}

TEST_CASE("type D product with a merge") {
  auto x = D(5, "({2,-3}|{1,-5,-4})");
  auto y = D(5, "({1,4,-5}|C:{2,-2,3,-3})");
  CHECK((x * y).to_string() == "({2,-3}|{1,-5}|C:{4,-4})");
  // the same faces written as full partitions, via the oracle
  CHECK(oracle::product_text(x, y) == "({2,-3}|{1,-5}|C:{4,-4})");
}

TEST_CASE("D parse merges a trailing singleton") {
  CHECK(D(3, "({2}|{-3}|{1})").to_string() == "({2}|{-3}|C:{1,-1})");
  CHECK(D(3, "({2}|{-3}|{-1})") == D(3, "({2}|{-3}|{1})"));
  CHECK(D(3, "({2}|{-3}|{-1})").is_chamber());
}

TEST_CASE("face types") {
  CHECK(A(4, "({2}|{1,3,4})").type().to_string() == "{s1}");
  CHECK(B(3, "({2}|{-3}|{1})").type() == FaceType::full(Family::B, 3));
  CHECK(B(3, "({2}|{-3}|{1})").type().to_string() == "{s1,s2,t}");
  CHECK(D(3, "({1,2,3})").type().to_string() == "{u}");
  CHECK(D(3, "({-1,2,3})").type().to_string() == "{v}");
  CHECK(D(3, "({-1,-2,3})").type().to_string() == "{u}");
  CHECK(D(3, "({1,2}|C:{3,-3})").type().to_string() == "{u,v}");
  CHECK(D(3, "({1}|C:{2,-2,3,-3})").type().to_string() == "{s1}");
  CHECK(D(3, "({1}|{2,3})").type().to_string() == "{s1,u}");
  CHECK(B(2, "({1,2})").type().to_string() == "{t}");
  CHECK(FaceType::parse(Family::D, 4, "{s_1, u}") == FaceType(Family::D, 4, 0b0101));
  CHECK_THROWS_AS(FaceType::parse(Family::A, 3, "{t}"), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_faces(Family::A, 3).size() == 13);
  CHECK(FaceCatalog::get(Family::B, 2).chambers().size() == 8);
  CHECK(enumerate_faces(Family::A, 4, FaceType::parse(Family::A, 4, "{s1}")).size() == 4);
  CHECK(FaceCatalog::get(Family::B, 4).faces().size() == 1697);
  for (int n = 2; n <= 5; ++n) {
    auto fact = factorial(static_cast<unsigned>(n)).get_ui();
    CHECK(FaceCatalog::get(Family::A, n).chambers().size() == fact);
    CHECK(FaceCatalog::get(Family::B, n).chambers().size() == (1u << n) * fact);
    CHECK(FaceCatalog::get(Family::D, n).chambers().size() == (1u << (n - 1)) * fact);
  }
}

TEST_CASE("type count identity for initial segments") {
  for (int n = 2; n <= 6; ++n) {
    std::uint32_t bits = 0;
    unsigned long expect = 1;
    for (int j = 1; j <= n - 1; ++j) {
      bits |= 1u << (j - 1);
      expect *= static_cast<unsigned long>(n - j + 1);
      CHECK(enumerate_faces(Family::A, n, FaceType(Family::A, n, bits)).size() == expect);
    }
  }
}

TEST_CASE("canonical text round trip and sorted catalog") {
  for (auto fam : {Family::A, Family::B, Family::D})
    for (int n = 2; n <= 4; ++n) {
      const auto& faces = FaceCatalog::get(fam, n).faces();
      std::set<std::string> seen;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        auto s = faces[i].to_string();
        CHECK(Face::parse(fam, n, s) == faces[i]);
        CHECK(Face::from_levels(fam, n, faces[i].levels()) == faces[i]);
        if (i) CHECK(faces[i - 1].to_string() < s);
        seen.insert(s);
      }
      CHECK(seen.size() == faces.size());
    }
}

TEST_CASE("chamber decks") {
  auto c = B(3, "({2}|{-3}|{1})");
  CHECK(c.deck() == std::vector<int>{2, -3, 1});
  CHECK(Face::from_deck(Family::B, std::vector<int>{2, -3, 1}) == c);
  for (auto fam : {Family::A, Family::B, Family::D})
    for (const auto& ch : FaceCatalog::get(fam, 4).chambers()) CHECK(Face::from_deck(fam, ch.deck()) == ch);
  CHECK(Face::from_deck(Family::D, std::vector<int>{2, -3, -1}) == Face::from_deck(Family::D, std::vector<int>{2, -3, 1}));
}

TEST_CASE("associativity, exhaustive") {
  std::vector<std::pair<Family, int>> cases = {{Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                               {Family::B, 2}, {Family::B, 3}, {Family::D, 3}};
  for (auto [fam, n] : cases) {
    const auto& f = FaceCatalog::get(fam, n).faces();
    std::size_t bad = 0;
    for (const auto& x : f)
      for (const auto& y : f) {
        auto xy = x * y;
        for (const auto& z : f) bad += (xy * z) != (x * (y * z));
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("identity and chamber ideal, exhaustive for n <= 4") {
  for (auto fam : {Family::A, Family::B, Family::D})
    for (int n = 2; n <= 4; ++n) {
      const auto& cat = FaceCatalog::get(fam, n);
      auto one = Face::identity(fam, n);
      std::size_t bad = 0;
      for (const auto& x : cat.faces()) {
        bad += (one * x != x) + (x * one != x);
        for (const auto& c : cat.chambers()) bad += !(x * c).is_chamber();
      }
      CHECK(bad == 0);
    }
}

TEST_CASE("partition product matches the refinement oracle") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::D, 3}, {Family::D, 4}}) {
    const auto& f = FaceCatalog::get(fam, n).faces();
    std::size_t bad = 0;
    for (const auto& x : f)
      for (const auto& y : f) bad += (x * y).to_string() != oracle::product_text(x, y);
    CHECK(bad == 0);
  }
}

TEST_CASE("partition product matches the sign vector product") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::D, 3}, {Family::D, 4}}) {
    const auto& f = FaceCatalog::get(fam, n).faces();
    std::size_t bad = 0;
    for (const auto& x : f) {
      auto sx = SignVector::of(x);
      CHECK(sx.face() == x);
      for (const auto& y : f) bad += sign_vector_product(sx, SignVector::of(y)).face() != x * y;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("sign vectors") {
  // B_1 has a single hyperplane x_1 = 0
  SignVector plus(Family::B, 1, {1}), zero(Family::B, 1, {0});
  CHECK(sign_vector_product(zero, plus) == plus);
  CHECK(sign_vector_product(plus, zero) == plus);
  CHECK(sign_vector_product(plus, plus) == plus);
  // A_2: x1 = x2, x1 = x3, x2 = x3
  CHECK_THROWS_AS(SignVector(Family::A, 3, {0, -1, 1}), std::invalid_argument);
  SignVector p(Family::A, 3, {1, 0, -1}), q(Family::A, 3, {-1, -1, 1});
  CHECK(sign_vector_product(p, q).to_string() == "(+,-,-)");
  CHECK(SignVector::hyperplane_count(Family::B, 3) == 9);
  CHECK(SignVector::hyperplane_count(Family::D, 3) == 6);
}

TEST_CASE("canonicalization is idempotent") {
  for (const auto& f : FaceCatalog::get(Family::D, 4).faces()) {
    auto lv = f.levels();
    CHECK(Face::from_levels(Family::D, 4, lv) == f);
    for (int& v : lv) v *= 3;
    CHECK(Face::from_levels(Family::D, 4, lv) == f);
  }
}

TEST_CASE("face relation") {
  CHECK(is_face_of(A(4, "({1,2,3,4})"), A(4, "({2}|{1,3}|{4})")));
  CHECK(is_face_of(A(4, "({2}|{1,3,4})"), A(4, "({2}|{1}|{3}|{4})")));
  CHECK_FALSE(is_face_of(A(4, "({2}|{1,3,4})"), A(4, "({1}|{2}|{3}|{4})")));
}

TEST_CASE("containing chamber counts match direct counts") {
  for (auto fam : {Family::A, Family::B, Family::D}) {
    const auto& cat = FaceCatalog::get(fam, 3);
    for (auto t : cat.types()) {
      const auto& rep = cat.faces()[cat.faces_of_type(t).front()];
      std::size_t direct = 0;
      for (const auto& c : cat.chambers()) direct += is_face_of(rep, c);
      CHECK(direct == cat.chambers_containing(t));
    }
  }
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(A(3, "({1,2})"), std::invalid_argument);
  CHECK_THROWS_AS(A(3, "({1,2}|{2,3})"), std::invalid_argument);
  CHECK_THROWS_AS(B(2, "({1,-1}|Z:{2})"), std::invalid_argument);
  CHECK_THROWS_AS(product(A(3, "({1,2,3})"), A(2, "({1,2})")), std::invalid_argument);
  CHECK_THROWS_AS(product(A(2, "({1,2})"), B(2, "({1,2})")), std::invalid_argument);
  CHECK_THROWS_AS(Face::identity(Family::D, 1), std::invalid_argument);
  CHECK_THROWS_AS(FaceCatalog::get(Family::B, 7), std::invalid_argument);
}
