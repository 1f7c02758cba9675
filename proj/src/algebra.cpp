#include "coxshuffle/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace coxshuffle {

// ---- AlgebraElement ---------------------------------------------------------

AlgebraElement::AlgebraElement(Family family, int n) : family_(family), n_(n) { check_rank(family, n); }

AlgebraElement AlgebraElement::identity(Family family, int n) {
  return of_face(Face::identity(family, n));
}

AlgebraElement AlgebraElement::of_face(const Face& f, const Rational& c) {
  AlgebraElement x(f.family(), f.n());
  x.add_term(f, c);
  return x;
}

Rational AlgebraElement::coefficient(const Face& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Face& f, const Rational& c) {
  if (f.family() != family_ || f.n() != n_) throw std::invalid_argument("face from another complex");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (inserted) {
    it->second.canonicalize();  // callers may pass an unreduced mpq
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational AlgebraElement::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [f, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<Face, Rational>> AlgebraElement::sorted_terms() const {
  std::vector<std::pair<std::string, const std::pair<const Face, Rational>*>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(t.first.to_string(), &t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Face, Rational>> out;
  out.reserve(keyed.size());
  for (const auto& [s, t] : keyed) out.emplace_back(t->first, t->second);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [f, c] : sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += coxshuffle::to_string(c) + "*" + f.to_string();
  }
  return s;
}

void AlgebraElement::check_same(const AlgebraElement& y) const {
  if (family_ != y.family_ || n_ != y.n_) throw std::invalid_argument("algebra elements from different complexes");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  check_same(y);
  for (const auto& [f, c] : y.terms_) add_term(f, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  check_same(y);
  for (const auto& [f, c] : y.terms_) add_term(f, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
AlgebraElement operator-(AlgebraElement x) { return x *= Rational(-1); }
AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }
AlgebraElement operator*(AlgebraElement x, const Rational& c) { return x *= c; }

AlgebraElement shift(const AlgebraElement& x, const Rational& c) {
  AlgebraElement y = x;
  y.add_term(Face::identity(x.family(), x.n()), -c);
  return y;
}

// ---- direct product -----------------------------------------------------------

namespace {

Face face_from_code(Family family, int n, std::uint64_t code) {
  const std::uint64_t r = family == Family::A ? static_cast<std::uint64_t>(n) : 2 * static_cast<std::uint64_t>(n) + 1;
  const int shift_by = family == Family::A ? 0 : n;
  int v[kMaxRank];
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<int>(code % r) - shift_by;
    code /= r;
  }
  return canonical_face(family, n, v);
}

// Multiset of faces, counted in a dense array when the code space is small.
class FaceCounter {
 public:
  FaceCounter(Family family, int n) : family_(family), n_(n) {
    auto limit = face_code_limit(family, n);
    if (limit <= (1u << 23)) dense_.assign(limit, 0);
  }

  void add(const Face& f) {
    auto code = face_code(f);
    if (dense_.empty()) {
      ++sparse_[code];
    } else if (dense_[code]++ == 0) {
      touched_.push_back(code);
    }
  }

  template <class F>
  void flush(F&& emit) {
    if (dense_.empty()) {
      for (const auto& [code, count] : sparse_) emit(face_from_code(family_, n_, code), count);
      sparse_.clear();
      return;
    }
    for (auto code : touched_) {
      emit(face_from_code(family_, n_, code), dense_[code]);
      dense_[code] = 0;
    }
    touched_.clear();
  }

 private:
  Family family_;
  int n_;
  std::vector<std::int64_t> dense_;
  std::vector<std::uint64_t> touched_;
  std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

std::vector<std::pair<Rational, std::vector<Face>>> group_by_coefficient(const AlgebraElement& x) {
  std::map<Rational, std::vector<Face>> groups;
  for (const auto& [f, c] : x.terms()) groups[c].push_back(f);
  return {groups.begin(), groups.end()};
}

AlgebraElement multiply_direct(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out(x.family(), x.n());
  FaceCounter counter(x.family(), x.n());
  auto gx = group_by_coefficient(x), gy = group_by_coefficient(y);
  for (const auto& [cx, fx] : gx) {
    for (const auto& [cy, fy] : gy) {
      for (const auto& f : fx)
        for (const auto& g : fy) counter.add(f * g);
      Rational c = cx * cy;
      counter.flush([&](const Face& f, std::int64_t count) { out.add_term(f, c * count); });
    }
  }
  return out;
}

constexpr double kInvariantBudget = 1e8;

}  // namespace

// ---- invariant subalgebra ------------------------------------------------------

AlgebraElement sigma_J(FaceType J) { return sigma_J(J.family(), J.n(), J); }

AlgebraElement sigma_J(Family family, int n, FaceType J) {
  if (J.family() != family || J.n() != n) throw std::invalid_argument("type from another complex");
  const auto& cat = FaceCatalog::get(family, n);
  AlgebraElement x(family, n);
  for (auto i : cat.faces_of_type(J)) x.add_term(cat.faces()[i], 1);
  return x;
}

std::optional<std::vector<Rational>> invariant_coordinates(const AlgebraElement& x) {
  const auto& cat = FaceCatalog::get(x.family(), x.n());
  const std::size_t slots = std::size_t{1} << label_count(x.family(), x.n());
  std::vector<Rational> coord(slots, 0);
  std::vector<std::size_t> count(slots, 0);
  for (const auto& [f, c] : x.terms()) {
    auto b = f.type().bits();
    if (count[b]++ == 0) coord[b] = c;
    else if (coord[b] != c) return std::nullopt;
  }
  for (std::size_t b = 0; b < slots; ++b)
    if (count[b] && count[b] != cat.faces_of_type(FaceType(x.family(), x.n(), static_cast<std::uint32_t>(b))).size())
      return std::nullopt;
  return coord;
}

AlgebraElement from_invariant_coordinates(Family family, int n, const std::vector<Rational>& c) {
  const auto& cat = FaceCatalog::get(family, n);
  if (c.size() != std::size_t{1} << label_count(family, n)) throw std::invalid_argument("wrong coordinate count");
  AlgebraElement x(family, n);
  for (std::size_t b = 0; b < c.size(); ++b) {
    if (c[b] == 0) continue;
    for (auto i : cat.faces_of_type(FaceType(family, n, static_cast<std::uint32_t>(b)))) x.add_term(cat.faces()[i], c[b]);
  }
  return x;
}

double InvariantStructure::build_cost(Family family, int n) {
  const auto& cat = FaceCatalog::get(family, n);
  return std::pow(3.0, label_count(family, n)) * static_cast<double>(cat.faces().size());
}

InvariantStructure::InvariantStructure(Family family, int n) {
  const auto& cat = FaceCatalog::get(family, n);
  slots_ = std::size_t{1} << label_count(family, n);
  table_.assign(slots_ * slots_, {});
  std::vector<std::int64_t> counts(slots_ * slots_);
  for (auto L : cat.types()) {
    const Face& g = cat.faces()[cat.faces_of_type(L).front()];
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& f : cat.faces()) {
      if (f * g != g) continue;
      auto J = f.type().bits();
      for (const auto& h : cat.faces())
        if (f * h == g) ++counts[J * slots_ + h.type().bits()];
    }
    for (std::size_t jk = 0; jk < counts.size(); ++jk)
      if (counts[jk]) table_[jk].emplace_back(L.bits(), counts[jk]);
  }
}

const InvariantStructure& InvariantStructure::get(Family family, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<InvariantStructure>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(family), n}];
  if (!slot) slot.reset(new InvariantStructure(family, n));
  return *slot;
}

std::int64_t InvariantStructure::constant(std::uint32_t J, std::uint32_t K, std::uint32_t L) const {
  for (const auto& [l, c] : table_.at(J * slots_ + K))
    if (l == L) return c;
  return 0;
}

std::vector<Rational> InvariantStructure::multiply(const std::vector<Rational>& x,
                                                   const std::vector<Rational>& y) const {
  std::vector<Rational> out(slots_, 0);
  for (std::size_t J = 0; J < slots_; ++J) {
    if (x[J] == 0) continue;
    for (std::size_t K = 0; K < slots_; ++K) {
      if (y[K] == 0) continue;
      Rational c = x[J] * y[K];
      for (const auto& [L, count] : table_[J * slots_ + K]) out[L] += c * count;
    }
  }
  return out;
}

// ---- product dispatch -----------------------------------------------------------

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, ProductRoute route) {
  if (x.family() != y.family() || x.n() != y.n())
    throw std::invalid_argument("algebra elements from different complexes");
  if (route == ProductRoute::Direct || x.is_zero() || y.is_zero()) return multiply_direct(x, y);
  bool affordable = true;
  if (route == ProductRoute::Auto) {
    // Small products are cheaper term by term.
    if (static_cast<double>(x.size()) * static_cast<double>(y.size()) < 2e5) return multiply_direct(x, y);
    affordable = InvariantStructure::build_cost(x.family(), x.n()) <= kInvariantBudget;
  }
  std::optional<std::vector<Rational>> cx, cy;
  if (affordable) {
    cx = invariant_coordinates(x);
    if (cx) cy = invariant_coordinates(y);
  }
  if (!cx || !cy) {
    if (route == ProductRoute::Invariant) throw std::invalid_argument("invariant route needs W-invariant factors");
    return multiply_direct(x, y);
  }
  const auto& s = InvariantStructure::get(x.family(), x.n());
  return from_invariant_coordinates(x.family(), x.n(), s.multiply(*cx, *cy));
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

AlgebraElement power(const AlgebraElement& x, unsigned k) {
  AlgebraElement r = AlgebraElement::identity(x.family(), x.n());
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace coxshuffle
