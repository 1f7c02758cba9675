#include "coxshuffle/io.hpp"

#include <limits>
#include <stdexcept>

namespace coxshuffle {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json element_json(const AlgebraElement& x) {
  Json out;
  out["family"] = std::string(to_string(x.family()));
  out["n"] = x.n();
  Json terms = Json::array();
  for (const auto& [f, c] : x.sorted_terms())
    terms.push_back({{"face", f.to_string()}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
  out["terms"] = std::move(terms);
  return out;
}

AlgebraElement element_from_json(const Json& j) {
  const Family family = parse_family(j.at("family").get<std::string>());
  const int n = j.at("n").get<int>();
  check_rank(family, n);
  AlgebraElement x(family, n);
  for (const auto& t : j.at("terms")) {
    Integer den = t.contains("den") ? integer_from_json(t.at("den")) : Integer(1);
    if (den == 0) throw std::invalid_argument("zero denominator");
    x.add_term(Face::parse(family, n, t.at("face").get<std::string>()), make_rational(integer_from_json(t.at("num")), den));
  }
  return x;
}

AlgebraElement parse_element_text(Family family, int n, std::string_view text) {
  check_rank(family, n);
  AlgebraElement x(family, n);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return x;
  // terms are separated by " + " outside parentheses
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')') --depth;
      if (depth != 0 || text[i] != '+') continue;
    }
    auto term = trim(text.substr(start, i - start));
    start = i + 1;
    if (term.empty()) throw std::invalid_argument("empty term in element");
    Rational c = 1;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      c = parse_rational(trim(term.substr(0, star)));
      term = trim(term.substr(star + 1));
    }
    x.add_term(Face::parse(family, n, term), c);
  }
  return x;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json item{{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(std::move(item));
  }
  return out;
}

Json spectrum_json(const SpectrumReport& r) {
  Json out;
  out["family"] = std::string(to_string(r.family));
  out["n"] = r.n;
  out["a"] = r.a;
  Json ev = Json::array(), mult = Json::array();
  for (const auto& x : r.eigenvalues) ev.push_back(integer_json(x));
  for (const auto& x : r.multiplicities) mult.push_back(integer_json(x));
  out["eigenvalues"] = std::move(ev);
  out["multiplicities"] = std::move(mult);
  out["annihilation"] = r.annihilation;
  out["minimal"] = r.minimal;
  out["chambers"] = r.chambers;
  out["rank_certificate"] = r.rank_checked ? Json(r.ranks_agree) : Json(nullptr);
  return out;
}

Json subspace_json(const Geometry& g, Geometry::Id id) {
  Json rows = Json::array();
  for (const auto& r : g.rref(id)) rows.push_back(r);
  return rows;
}

Json flag_json(Building& b, const FlagFace& f) {
  Json out = Json::array();
  for (auto id : f.chain) out.push_back(subspace_json(b.geometry(), id));
  return out;
}

std::string table_csv(const CoefficientTable& t) {
  std::string out = "a,j,value\n";
  for (std::size_t a = 0; a < t.values.size(); ++a)
    for (std::size_t j = 0; j < t.values[a].size(); ++j)
      out += std::to_string(a) + "," + std::to_string(j) + "," + t.values[a][j].get_str() + "\n";
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coxshuffle
