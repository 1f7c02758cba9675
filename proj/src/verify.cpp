#include "coxshuffle/verify.hpp"

#include <algorithm>
#include <sstream>

#include "coxshuffle/linalg.hpp"
#include "coxshuffle/maps.hpp"
#include "coxshuffle/spectral.hpp"

namespace coxshuffle {

namespace {

Check make(std::string name, std::string statement, bool passed, std::string detail = {}) {
  return {std::move(name), std::move(statement), passed, std::move(detail)};
}

std::string fam(ShuffleFamily f) { return std::string(to_string(f)); }

bool additive(ShuffleFamily f) { return info(f).arity == Arity::Additive; }

std::vector<Check> semigroup(ShuffleFamily f, int n) {
  std::string bad;
  std::string statement;
  if (additive(f)) {
    statement = "S_a S_b = S_{a+b} for a + b <= 6";
    for (long a = 0; a <= 6; ++a)
      for (long b = 0; a + b <= 6; ++b)
        if (shuffle(f, n, a) * shuffle(f, n, b) != shuffle(f, n, a + b))
          bad += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  } else {
    statement = "S_a S_b = S_{ab} for 1 <= a, b <= 3";
    for (long a = 1; a <= 3; ++a)
      for (long b = 1; b <= 3; ++b)
        if (shuffle(f, n, a) * shuffle(f, n, b) != shuffle(f, n, a * b))
          bad += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  std::vector<Check> out{make("semigroup", fam(f) + ": " + statement, bad.empty(), bad.empty() ? "" : "fails at" + bad)};
  // S_1 is the identity of the riffle families; S_0 of the additive ones
  const auto one = AlgebraElement::identity(info(f).complex, n);
  const long unit = additive(f) ? 0 : 1;
  out.push_back(make("semigroup-unit", fam(f) + ": S_" + std::to_string(unit) + " = 1", shuffle(f, n, unit) == one));
  return out;
}

std::vector<Check> idempotent_checks(ShuffleFamily f, int n) {
  const auto comps = idempotents(f, n);
  const auto one = AlgebraElement::identity(info(f).complex, n);
  AlgebraElement sum(info(f).complex, n);
  std::string bad;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    sum += comps[i].element;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      auto p = comps[i].element * comps[j].element;
      bool ok = i == j ? p == comps[i].element : p.is_zero();
      if (!ok) bad += " " + comps[i].label + "*" + comps[j].label;
    }
  }
  std::vector<Check> out;
  out.push_back(make("idempotents-orthogonal", fam(f) + ": e_i e_j = delta_ij e_i over " + std::to_string(comps.size()) + " components",
                     bad.empty(), bad));
  out.push_back(make("idempotents-complete", fam(f) + ": sum of e_i = 1", sum == one));
  bool nonzero = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return !c.element.is_zero(); });
  out.push_back(make("idempotents-nonzero", fam(f) + ": every listed component is nonzero", nonzero));
  if (f == ShuffleFamily::SideA || f == ShuffleFamily::TwoSidedA || f == ShuffleFamily::SideD)
    out.push_back(make("idempotent-degenerate", fam(f) + ": e_{n-1} = 0", idempotent(f, n, n - 1).is_zero()));
  if (f == ShuffleFamily::RiffleB)
    out.push_back(make("idempotent-degenerate", fam(f) + ": e'_n = e_n", idempotent(f, n, n, true) == idempotent(f, n, n)));
  return out;
}

std::vector<long> indices(ShuffleFamily f) {
  if (additive(f)) return {0, 1, 2, 3, 4};
  return {1, 2, 3, 4, 5, 6};
}

std::vector<Check> character_checks(ShuffleFamily f, int n) {
  const auto comps = idempotents(f, n);
  std::string bad;
  for (long a : indices(f)) {
    AlgebraElement rhs(info(f).complex, n);
    for (std::size_t i = 0; i < comps.size(); ++i) rhs += Rational(character_value(f, n, i, a)) * comps[i].element;
    if (rhs != shuffle(f, n, a)) bad += " a=" + std::to_string(a);
  }
  std::string law = additive(f) ? "chi_i(a) = c^a" : "chi_i(a) = a^c";
  return {make("characters", fam(f) + ": S_a = sum chi_i(a) e_i with " + law, bad.empty(), bad)};
}

std::vector<Check> minpoly_checks(ShuffleFamily f, int n) {
  std::vector<Check> out;
  const std::vector<long> as = additive(f) ? std::vector<long>{1, 2, 3} : std::vector<long>{2, 3};
  for (long a : as) {
    auto r = verify_minimal_polynomial(f, n, a);
    Integer total = 0;
    for (const auto& m : r.multiplicities) total += m;
    std::ostringstream ev;
    ev << "eigenvalues";
    for (const auto& x : r.eigenvalues) ev << ' ' << x.get_str();
    ev << "; multiplicities";
    for (const auto& x : r.multiplicities) ev << ' ' << x.get_str();
    if (!r.redundant.empty()) ev << "; redundant factors";
    for (const auto& x : r.redundant) ev << ' ' << x.get_str();
    if (!r.rank_checked) ev << "; rank certificate skipped";
    std::string s = "S_" + std::to_string(a);
    out.push_back(make("minpoly-a" + std::to_string(a), fam(f) + ": prod (" + s + " - lambda) = 0 and no factor can be dropped",
                       r.ok(), ev.str()));
    out.push_back(make("multiplicities-a" + std::to_string(a), fam(f) + ": eigenvalue multiplicities of " + s + " sum to the chamber count",
                       total == Integer(static_cast<unsigned long>(r.chambers))));
  }
  return out;
}

std::vector<Check> stirling_checks(ShuffleFamily f, int n) {
  std::string bad;
  const std::vector<long> as = additive(f) ? std::vector<long>{1, 2, 3} : std::vector<long>{2, 3};
  for (long a : as)
    if (!stirling_identity_check(f, n, a)) bad += " a=" + std::to_string(a);
  std::string how = f == ShuffleFamily::RiffleA ? "binomial" : "Stirling";
  return {make("stirling", fam(f) + ": minimal polynomial vanishes on the " + how + " expansion of S_a", bad.empty(), bad)};
}

std::string failed_conditions(const AxiomReport& r) {
  std::string s;
  for (const auto& x : r.results)
    if (!x.passed) s += " (" + std::to_string(x.condition) + ")";
  return s;
}

std::vector<Check> axiom_checks(ShuffleFamily f, int n) {
  std::vector<Check> out;
  auto one = [&](AlgebraPart part, std::vector<int> expected_failures) {
    auto r = check_shuffle_algebra_axioms(f, n, part);
    bool ok = true;
    for (const auto& x : r.results) {
      bool expect_fail = std::find(expected_failures.begin(), expected_failures.end(), x.condition) != expected_failures.end();
      if (x.passed == expect_fail) ok = false;
    }
    std::string statement = r.algebra + ": conditions (1)-(4) hold";
    if (!expected_failures.empty()) statement += " except (2), which fails since sigma'_j spans ranks j and j+1";
    std::string detail = "dim " + std::to_string(r.dimension);
    if (auto bad = failed_conditions(r); !bad.empty()) detail += "; failing" + bad;
    out.push_back(make("axioms", statement, ok, detail));
  };
  if (is_riffle_double(f)) {
    one(AlgebraPart::Even, {});
    one(AlgebraPart::Odd, f == ShuffleFamily::RiffleD ? std::vector<int>{2} : std::vector<int>{});
  } else {
    one(AlgebraPart::Whole, {});
  }
  return out;
}

std::vector<Check> double_checks(ShuffleFamily f, int n) {
  std::vector<Check> out;
  const Family cx = info(f).complex;
  std::vector<linalg::Vector> basis;
  for (int j = 0; j <= n; ++j)
    for (bool primed : {false, true}) basis.push_back(*invariant_coordinates(sigma(f, n, j, primed)));
  auto dim = linalg::rank(basis);
  out.push_back(make("double-dimension", fam(f) + ": the sigma_j and sigma'_j span 2n dimensions", dim == static_cast<std::size_t>(2 * n),
                     "dim " + std::to_string(dim)));
  auto comps = idempotents(f, n);
  AlgebraElement sum(cx, n);
  for (const auto& c : comps) sum += c.element;
  out.push_back(make("double-system", fam(f) + ": {e_i, e'_i - e_i} is a complete orthogonal system of 2n members",
                     comps.size() == static_cast<std::size_t>(2 * n) && sum == AlgebraElement::identity(cx, n),
                     std::to_string(comps.size()) + " members"));
  bool even_zero = true;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].character.kind == Character::Kind::OddOnly)
      for (long a = 2; a <= 6; a += 2) even_zero = even_zero && character_value(f, n, i, a) == 0;
  out.push_back(make("double-even-vanishing", fam(f) + ": chi'_i(S_{2a}) = 0", even_zero));
  bool mp = true;
  std::string detail;
  for (long a : {2L, 3L, 4L, 5L}) {
    auto r = verify_minimal_polynomial(f, n, a);
    mp = mp && r.ok();
    detail += " a=" + std::to_string(a) + ":" + std::to_string(r.eigenvalues.size());
  }
  out.push_back(make("double-minpoly", fam(f) + ": distinct character values give the minimal polynomial of S_a, both parities", mp,
                     "distinct eigenvalues" + detail));
  return out;
}

std::vector<Check> map_checks(ShuffleFamily f, int n) {
  if (f == ShuffleFamily::SideB) return side_chain_checks(n);
  auto out = riffle_double_checks(n);
  auto more = riffle_to_A_checks(n);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace

void check_verify_scale(ShuffleFamily f, int n) {
  const int limit = info(f).complex == Family::A ? 7 : 5;
  if (n > limit)
    throw ScaleLimit("n = " + std::to_string(n) + " exceeds the exact verification limit " + std::to_string(limit) + " for " + fam(f));
  check_family_rank(f, n);
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"semigroup", "idempotents", "characters", "minpoly",
                                              "stirling",  "axioms",      "double",     "maps"};
  return names;
}

std::vector<std::string> applicable_suites(ShuffleFamily f) {
  std::vector<std::string> out{"semigroup", "idempotents", "characters", "minpoly"};
  if (additive(f) || f == ShuffleFamily::RiffleA) out.push_back("stirling");
  out.push_back("axioms");
  if (is_riffle_double(f)) out.push_back("double");
  if (f == ShuffleFamily::SideB || f == ShuffleFamily::RiffleB) out.push_back("maps");
  return out;
}

std::vector<Check> verify_suite(ShuffleFamily f, int n, std::string_view suite) {
  check_verify_scale(f, n);
  auto app = applicable_suites(f);
  if (std::find(app.begin(), app.end(), suite) == app.end())
    throw std::invalid_argument("check '" + std::string(suite) + "' does not apply to " + fam(f));
  if (suite == "semigroup") return semigroup(f, n);
  if (suite == "idempotents") return idempotent_checks(f, n);
  if (suite == "characters") return character_checks(f, n);
  if (suite == "minpoly") return minpoly_checks(f, n);
  if (suite == "stirling") return stirling_checks(f, n);
  if (suite == "axioms") return axiom_checks(f, n);
  if (suite == "double") return double_checks(f, n);
  return map_checks(f, n);
}

std::vector<Check> run_verify(ShuffleFamily f, int n, const std::vector<std::string>& suites) {
  check_verify_scale(f, n);
  const auto chosen = suites.empty() ? applicable_suites(f) : suites;
  for (const auto& s : chosen)
    if (std::find(verify_suite_names().begin(), verify_suite_names().end(), s) == verify_suite_names().end())
      throw std::invalid_argument("unknown check: " + s);
  std::vector<Check> out;
  for (const auto& s : chosen) {
    auto part = verify_suite(f, n, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace coxshuffle
