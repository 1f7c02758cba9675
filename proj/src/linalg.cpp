#include "coxshuffle/linalg.hpp"

#include <stdexcept>

namespace coxshuffle::linalg {

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<Vector> solve_combination(const std::vector<Vector>& basis, const Vector& target) {
  const std::size_t m = basis.size(), len = target.size();
  // Augmented system: rows are coordinates, columns are basis vectors.
  Matrix a(len, Vector(m + 1));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = basis[j].at(i);
    a[i][m] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < len; ++c) {
    std::size_t piv = r;
    while (piv < len && a[piv][c] == 0) ++piv;
    if (piv == len) continue;
    std::swap(a[r], a[piv]);
    Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k <= m; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < len; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k <= m; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < len; ++i)
    if (a[i][m] != 0) return std::nullopt;
  Vector x(m, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][m];
  return x;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("no inverse mod p");
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const Rational& x, std::uint64_t p) {
  Integer pp(std::to_string(p));
  Integer num = x.get_num() % pp, den = x.get_den() % pp;
  if (num < 0) num += pp;
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  auto to_u64 = [](const Integer& v) { return std::stoull(v.get_str()); };
  return mul_mod(to_u64(num), inv_mod(to_u64(den), p), p);
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::uint64_t inv = inv_mod(rows[r][c], p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      std::uint64_t f = mul_mod(rows[i][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) {
        std::uint64_t t = mul_mod(f, rows[r][k], p);
        rows[i][k] = rows[i][k] >= t ? rows[i][k] - t : rows[i][k] + p - t;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace coxshuffle::linalg
