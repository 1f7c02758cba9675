#include "coxshuffle/fq.hpp"

#include <stdexcept>

namespace coxshuffle {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::string_view to_string(FormKind k) {
  switch (k) {
    case FormKind::None: return "none";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Orthogonal: return "orthogonal";
  }
  return "?";
}

namespace {

long inverse(long a, long q) {
  long r = 1, e = q - 2, b = a % q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<Geometry::Vec> rref(std::vector<Geometry::Vec> rows, long q) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    long inv = inverse(rows[r][c], q);
    for (auto& v : rows[r]) v = static_cast<int>(v * inv % q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      long f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = static_cast<int>(((rows[i][j] - f * rows[r][j]) % q + q) % q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Geometry::Geometry(long q, int dim, FormKind form) : q_(q), dim_(dim), form_(form) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + std::to_string(q));
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (form != FormKind::None && dim % 2) throw std::invalid_argument("forms need even dimension");
  double total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<double>(q);
  if (total > 1e6) throw std::invalid_argument("q^dim too large for enumeration");
  zero_ = intern({});
  std::vector<Vec> id(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  whole_ = intern(id);
}

std::uint32_t Geometry::code(const Vec& v) const {
  std::uint32_t c = 0;
  for (int x : v) c = c * static_cast<std::uint32_t>(q_) + static_cast<std::uint32_t>(x);
  return c;
}

std::vector<Geometry::Vec> Geometry::all_vectors() const {
  std::vector<Vec> out{Vec(static_cast<std::size_t>(dim_))};
  for (int i = 0; i < dim_; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (long a = 0; a < q_; ++a) {
        next.push_back(v);
        next.back()[static_cast<std::size_t>(i)] = static_cast<int>(a);
      }
    out.swap(next);
  }
  return out;  // ordered by code
}

Geometry::Id Geometry::intern(std::vector<Vec> rows) {
  std::string key;
  for (const auto& r : rows) {
    for (int x : r) key.push_back(static_cast<char>('0' + x));
    key.push_back(',');
  }
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  Id id = static_cast<Id>(spaces_.size());
  int d = static_cast<int>(rows.size());
  spaces_.push_back({d, std::move(rows), {}});
  index_.emplace(std::move(key), id);
  return id;
}

Geometry::Id Geometry::span(const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector of wrong length");
  std::vector<Vec> rows;
  for (auto v : vectors) {
    for (auto& x : v) x = static_cast<int>(((x % q_) + q_) % q_);
    rows.push_back(std::move(v));
  }
  return intern(coxshuffle::rref(std::move(rows), q_));
}

const std::vector<std::uint8_t>& Geometry::members(Id a) {
  auto& s = spaces_[static_cast<std::size_t>(a)];
  if (s.members.empty()) {
    std::size_t total = 1;
    for (int i = 0; i < dim_; ++i) total *= static_cast<std::size_t>(q_);
    std::vector<std::uint8_t> m(total);
    // all combinations of the basis rows
    std::vector<Vec> acc{Vec(static_cast<std::size_t>(dim_))};
    for (const auto& row : s.rows) {
      std::vector<Vec> next;
      for (const auto& v : acc)
        for (long c = 0; c < q_; ++c) {
          Vec w = v;
          for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<int>((w[j] + c * row[j]) % q_);
          next.push_back(std::move(w));
        }
      acc.swap(next);
    }
    for (const auto& v : acc) m[code(v)] = 1;
    spaces_[static_cast<std::size_t>(a)].members = std::move(m);
  }
  return spaces_[static_cast<std::size_t>(a)].members;
}

bool Geometry::contains_vector(Id a, const Vec& v) { return members(a)[code(v)] != 0; }

bool Geometry::contains(Id big, Id small) {
  for (const auto& r : rref(small))
    if (!contains_vector(big, r)) return false;
  return true;
}

Geometry::Id Geometry::sum(Id a, Id b) {
  if (a > b) std::swap(a, b);
  auto key = pair_key(a, b);
  if (auto it = sum_cache_.find(key); it != sum_cache_.end()) return it->second;
  std::vector<Vec> rows = rref(a);
  for (const auto& r : rref(b)) rows.push_back(r);
  Id s = intern(coxshuffle::rref(std::move(rows), q_));
  sum_cache_.emplace(key, s);
  return s;
}

Geometry::Id Geometry::meet(Id a, Id b) {
  if (a > b) std::swap(a, b);
  auto key = pair_key(a, b);
  if (auto it = meet_cache_.find(key); it != meet_cache_.end()) return it->second;
  Id small = dim_of(a) <= dim_of(b) ? a : b, big = small == a ? b : a;
  const auto& mb = members(big);
  const auto ms = members(small);
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < ms.size(); ++c)
    if (ms[c] && mb[c]) {
      Vec v(static_cast<std::size_t>(dim_));
      auto x = c;
      for (int i = dim_; i-- > 0; x /= static_cast<std::size_t>(q_)) v[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(q_));
      rows.push_back(std::move(v));
    }
  Id m = intern(coxshuffle::rref(std::move(rows), q_));
  meet_cache_.emplace(key, m);
  return m;
}

int Geometry::bilinear(const Vec& x, const Vec& y) const {
  if (form_ == FormKind::None) throw std::logic_error("no form on this space");
  const int n = dim_ / 2;
  long s = 0;
  for (int i = 0; i < n; ++i) {
    long a = static_cast<long>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(n + i)];
    long b = static_cast<long>(x[static_cast<std::size_t>(n + i)]) * y[static_cast<std::size_t>(i)];
    s += form_ == FormKind::Symplectic ? a - b : a + b;
  }
  return static_cast<int>(((s % q_) + q_) % q_);
}

int Geometry::quadratic(const Vec& x) const {
  if (form_ != FormKind::Orthogonal) throw std::logic_error("no quadratic form on this space");
  const int n = dim_ / 2;
  long s = 0;
  for (int i = 0; i < n; ++i) s += static_cast<long>(x[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(n + i)];
  return static_cast<int>(s % q_);
}

Geometry::Id Geometry::perp(Id a) {
  if (auto it = perp_cache_.find(a); it != perp_cache_.end()) return it->second;
  std::vector<Vec> rows;
  for (const auto& v : all_vectors()) {
    bool ok = true;
    for (const auto& r : rref(a))
      if (bilinear(r, v) != 0) {
        ok = false;
        break;
      }
    if (ok) rows.push_back(v);
  }
  Id p = intern(coxshuffle::rref(std::move(rows), q_));
  perp_cache_.emplace(a, p);
  return p;
}

bool Geometry::isotropic(Id a) {
  if (form_ == FormKind::None) return true;
  if (auto it = iso_cache_.find(a); it != iso_cache_.end()) return it->second;
  const auto rows = rref(a);
  bool ok = true;
  for (std::size_t i = 0; i < rows.size() && ok; ++i) {
    // Q vanishing on a basis plus B-orthogonality covers every vector, also for q = 2
    if (form_ == FormKind::Orthogonal && quadratic(rows[i]) != 0) ok = false;
    for (std::size_t j = i + 1; j < rows.size() && ok; ++j)
      if (bilinear(rows[i], rows[j]) != 0) ok = false;
  }
  iso_cache_.emplace(a, ok);
  return ok;
}

std::vector<Geometry::Id> Geometry::subspaces(int k, bool isotropic_only) {
  std::vector<Id> out;
  if (k < 0 || k > dim_) return out;
  // choose pivot columns, then fill the free entries
  std::vector<int> piv(static_cast<std::size_t>(k));
  auto fill = [&](auto&& self, std::size_t row, int start) -> void {
    if (row == static_cast<std::size_t>(k)) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < piv.size(); ++r)
        for (int c = piv[r] + 1; c < dim_; ++c) {
          bool is_piv = false;
          for (int p : piv) is_piv |= p == c;
          if (!is_piv) free.emplace_back(r, static_cast<std::size_t>(c));
        }
      std::vector<Vec> rows(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(dim_)));
      for (std::size_t r = 0; r < piv.size(); ++r) rows[r][static_cast<std::size_t>(piv[r])] = 1;
      std::vector<int> digits(free.size());
      while (true) {
        for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = digits[i];
        Id id = intern(rows);
        if (!isotropic_only || isotropic(id)) out.push_back(id);
        std::size_t i = free.size();
        while (i > 0) {
          --i;
          if (++digits[i] < q_) break;
          digits[i] = 0;
          if (i == 0) return;
        }
        if (free.empty()) return;
      }
    }
    for (int c = start; c < dim_; ++c) {
      piv[row] = c;
      self(self, row + 1, c + 1);
    }
  };
  fill(fill, 0, 0);
  return out;
}

std::string Geometry::to_string(Id a) const {
  std::string s = "<";
  const auto& rows = rref(a);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    for (int x : rows[i]) s += static_cast<char>('0' + x);
  }
  return s + ">";
}

}  // namespace coxshuffle
