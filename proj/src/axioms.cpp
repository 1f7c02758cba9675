#include <sstream>
#include <stdexcept>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/linalg.hpp"

namespace coxshuffle {

std::pair<ShuffleFamily, AlgebraPart> parse_algebra_id(std::string_view id) {
  auto dash = id.find('-');
  auto f = parse_shuffle_family(id.substr(0, dash));
  if (dash == std::string_view::npos) return {f, AlgebraPart::Whole};
  if (!is_riffle_double(f)) throw std::invalid_argument("only riffleB and riffleD have parts");
  auto part = id.substr(dash + 1);
  if (part == "even") return {f, AlgebraPart::Even};
  if (part == "odd") return {f, AlgebraPart::Odd};
  if (part == "double") return {f, AlgebraPart::Whole};
  throw std::invalid_argument("unknown algebra part: " + std::string(part));
}

std::string algebra_id(ShuffleFamily f, AlgebraPart part) {
  std::string s(to_string(f));
  if (part == AlgebraPart::Even) return s + "-even";
  if (part == AlgebraPart::Odd) return s + "-odd";
  return is_riffle_double(f) ? s + "-double" : s;
}

bool AxiomReport::passed(int condition) const {
  for (const auto& r : results)
    if (r.condition == condition) return r.passed;
  return false;
}

bool AxiomReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

namespace {

using linalg::Vector;

Vector coords(const AlgebraElement& x) {
  auto c = invariant_coordinates(x);
  if (!c) throw std::logic_error("expected a W-invariant element");
  return *c;
}

std::size_t span_rank(const std::vector<Vector>& a, const std::vector<Vector>& b = {}) {
  linalg::Matrix m(a.begin(), a.end());
  m.insert(m.end(), b.begin(), b.end());
  return linalg::rank(std::move(m));
}

}  // namespace

AxiomReport check_shuffle_algebra_axioms(ShuffleFamily f, int n, AlgebraPart part) {
  check_family_rank(f, n);
  if (part != AlgebraPart::Whole && !is_riffle_double(f)) throw std::invalid_argument("only riffle doubles have parts");
  const Family cx = info(f).complex;
  const bool dbl = is_riffle_double(f);

  // Candidate basis, generator and shuffle indices.
  std::vector<Vector> basis;
  std::vector<long> indices;
  bool primed_generator = false;
  if (!dbl) {
    int top = f == ShuffleFamily::SideB ? n : n - 1;
    for (int j = 0; j <= top; ++j) basis.push_back(coords(sigma(f, n, j)));
    long first = info(f).arity == Arity::Additive ? 0 : 1;
    for (long a = first; a <= first + top + 1; ++a) indices.push_back(a);
  } else if (part == AlgebraPart::Even) {
    for (int j = 0; j <= n; ++j) basis.push_back(coords(sigma(f, n, j)));
    indices.push_back(1);
    for (long b = 1; b <= n + 1; ++b) indices.push_back(2 * b);
  } else if (part == AlgebraPart::Odd) {
    for (int j = 0; j <= n; ++j) basis.push_back(coords(sigma(f, n, j, true)));
    for (long b = 0; b <= n + 1; ++b) indices.push_back(2 * b + 1);
    primed_generator = true;
  } else {
    basis.push_back(coords(sigma(f, n, 0)));
    for (int j = 1; j < n; ++j) {
      basis.push_back(coords(sigma(f, n, j)));
      basis.push_back(coords(sigma(f, n, j, true)));
    }
    basis.push_back(coords(sigma(f, n, n)));
    for (long a = 1; a <= 2 * n + 2; ++a) indices.push_back(a);
  }

  AxiomReport rep;
  rep.algebra = algebra_id(f, part);
  rep.n = n;
  const std::size_t dim = span_rank(basis);
  rep.dimension = dim;
  const std::size_t bound = static_cast<std::size_t>(label_count(cx, n)) + 1;

  {
    std::ostringstream d;
    d << "dim=" << dim << " spanned by " << basis.size() << " sigma elements; bound rank+1=" << bound;
    rep.results.push_back({1, dim <= bound && dim == basis.size(), d.str()});
  }
  {
    // A has a basis σ_j ∈ kΣ_j (j < dim) iff every such A ∩ kΣ_j is nonzero.
    std::vector<int> missing;
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Vector> proj = basis;
      for (auto& v : proj)
        for (std::size_t b = 0; b < v.size(); ++b)
          if (static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(b))) == j) v[b] = 0;
      if (span_rank(proj) == dim) missing.push_back(static_cast<int>(j));
    }
    std::ostringstream d;
    if (missing.empty()) {
      d << "homogeneous element of each rank 0.." << dim - 1;
    } else {
      d << "no homogeneous element of rank";
      for (int j : missing) d << ' ' << j;
    }
    rep.results.push_back({2, missing.empty(), d.str()});
  }
  {
    auto gen = sigma(f, n, 1, primed_generator);
    std::vector<Vector> powers;
    auto p = AlgebraElement::identity(cx, n);
    for (std::size_t k = 0; k <= dim; ++k) {
      powers.push_back(coords(p));
      p = p * gen;
    }
    std::size_t r = span_rank(powers), joint = span_rank(basis, powers);
    std::ostringstream d;
    d << "dim k[" << (primed_generator ? "sigma'_1" : "sigma_1") << "]=" << r << ", dim A=" << dim;
    rep.results.push_back({3, r == dim && joint == dim, d.str()});
  }
  {
    std::vector<Vector> shuffles;
    for (long a : indices) shuffles.push_back(coords(shuffle(f, n, a)));
    std::size_t r = span_rank(shuffles), joint = span_rank(basis, shuffles);
    std::size_t solved = 0;
    for (const auto& b : basis) solved += linalg::solve_combination(shuffles, b).has_value();
    std::ostringstream d;
    d << "rank of S_a over " << indices.size() << " indices=" << r << "; " << solved << "/" << basis.size()
      << " sigma elements solved exactly";
    rep.results.push_back({4, r == dim && joint == dim && solved == basis.size(), d.str()});
  }
  return rep;
}

}  // namespace coxshuffle
