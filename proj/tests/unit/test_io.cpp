#include <doctest.h>

#include "coxshuffle/io.hpp"
#include "coxshuffle/verify.hpp"

using namespace coxshuffle;
using SF = ShuffleFamily;

TEST_CASE("element json round trip") {
  for (SF f : {SF::SideA, SF::TwoSidedA, SF::RiffleB, SF::SideD, SF::RiffleD}) {
    auto x = idempotent(f, 3, 1) + Rational(3, 7) * shuffle(f, 3, 2);
    auto j = element_json(x);
    CHECK(element_from_json(j) == x);
    CHECK(element_from_json(Json::parse(j.dump())) == x);
    // terms sorted by face text
    for (std::size_t i = 1; i < j["terms"].size(); ++i)
      CHECK(j["terms"][i - 1]["face"].get<std::string>() < j["terms"][i]["face"].get<std::string>());
  }
  auto big = AlgebraElement::of_face(Face::identity(Family::A, 2), Rational(factorial(30), 7));
  auto j = element_json(big);
  CHECK(j["terms"][0]["num"].is_string());
  CHECK(element_from_json(j) == big);
  CHECK(element_json(AlgebraElement(Family::B, 2))["terms"].empty());
}

TEST_CASE("element json errors") {
  CHECK_THROWS(element_from_json(Json::parse(R"j({"family":"E","n":2,"terms":[]})j")));
  CHECK_THROWS(element_from_json(Json::parse(R"j({"family":"A","n":2,"terms":[{"face":"({1,2})","num":1,"den":0}]})j")));
  CHECK_THROWS(element_from_json(Json::parse(R"j({"family":"A","n":2,"terms":[{"face":"({1}|{3})","num":1}]})j")));
  CHECK_THROWS(element_from_json(Json::parse(R"j({"family":"A","n":2})j")));
}

TEST_CASE("element text round trip") {
  for (SF f : {SF::SideA, SF::SideB, SF::RiffleD}) {
    auto x = Rational(-2, 3) * sigma(f, 3, 1) + shuffle(f, 3, 3);
    CHECK(parse_element_text(info(f).complex, 3, x.to_string()) == x);
  }
  CHECK(parse_element_text(Family::A, 3, "0").is_zero());
  auto y = parse_element_text(Family::A, 3, "({1}|{2,3}) + 2*({1}|{2,3})");
  CHECK(y.coefficient(Face::parse(Family::A, 3, "({1}|{2,3})")) == 3);
  CHECK_THROWS(parse_element_text(Family::A, 3, "({1}|{2,3}) + "));
}

TEST_CASE("spectrum and table serialization") {
  auto j = spectrum_json(verify_minimal_polynomial(SF::RiffleA, 3, 2));
  CHECK(j["eigenvalues"] == Json::parse("[2,4,8]"));
  CHECK(j["multiplicities"] == Json::parse("[2,3,1]"));
  CHECK(j["annihilation"] == true);
  CHECK(table_csv(coefficient_table(StirlingKind::Plain, 2, 2)) == "a,j,value\n0,0,1\n0,1,0\n0,2,0\n1,0,0\n1,1,1\n1,2,0\n2,0,0\n2,1,1\n2,2,1\n");
}

TEST_CASE("verify suites") {
  CHECK(all_passed(run_verify(SF::SideA, 4, {"semigroup", "idempotents", "minpoly"})));
  CHECK(all_passed(run_verify(SF::RiffleB, 3, {"double"})));
  CHECK(all_passed(run_verify(SF::TwoSidedA, 4)));
  CHECK(all_passed(run_verify(SF::SideB, 3)));
  CHECK(all_passed(run_verify(SF::RiffleA, 4)));

  // known failures
  auto d = run_verify(SF::RiffleD, 3, {"double"});
  CHECK_FALSE(all_passed(d));
  auto sd = run_verify(SF::SideD, 3, {"axioms"});
  CHECK_FALSE(sd[0].passed);
  CHECK(sd[0].detail.find("(2)") != std::string::npos);
  // riffleD-odd fails (2) as documented, so the axioms suite passes
  CHECK(all_passed(run_verify(SF::RiffleD, 3, {"axioms"})));

  CHECK_THROWS_AS(run_verify(SF::SideA, 8), ScaleLimit);
  CHECK_THROWS_AS(run_verify(SF::RiffleB, 6), ScaleLimit);
  CHECK_THROWS_AS(run_verify(SF::SideA, 3, {"double"}), std::invalid_argument);
  CHECK_THROWS_AS(run_verify(SF::SideA, 3, {"bogus"}), std::invalid_argument);
}
