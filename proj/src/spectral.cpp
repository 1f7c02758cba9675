#include "coxshuffle/spectral.hpp"

#include <sstream>
#include <stdexcept>

#include "coxshuffle/numbers.hpp"

namespace coxshuffle {

using linalg::Matrix;

Matrix TransitionOperator::normalized() const {
  Rational total = source.coefficient_sum();
  if (total == 0) throw std::domain_error("element has zero coefficient sum");
  Matrix m = matrix;
  for (auto& row : m)
    for (auto& v : row) v /= total;
  return m;
}

TransitionOperator transition_operator(const AlgebraElement& x) {
  if (x.is_zero()) throw std::invalid_argument("transition operator of zero");
  const auto& cat = FaceCatalog::get(x.family(), x.n());
  const auto& ch = cat.chambers();
  const std::size_t N = ch.size();
  Matrix m(N, linalg::Vector(N));
  for (const auto& [face, coef] : x.terms())
    for (std::size_t c = 0; c < N; ++c) m[cat.chamber_index(face * ch[c])][c] += coef;
  return {x.family(), x.n(), x, std::move(m)};
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.empty()) return {};
  if (x[0].size() != y.size()) throw std::invalid_argument("matrix shape mismatch");
  const std::size_t cols = y.empty() ? 0 : y[0].size();
  Matrix out(x.size(), linalg::Vector(cols));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (y[k][j] != 0) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

std::string matrix_csv(const Matrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j].get_num() << '/' << row[j].get_den();
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// trace of left multiplication = Σ coef · #chambers above the face
Rational operator_trace(const AlgebraElement& x) {
  const auto& cat = FaceCatalog::get(x.family(), x.n());
  Rational t;
  for (const auto& [face, coef] : x.terms()) t += coef * static_cast<unsigned long>(cat.chambers_containing(face.type()));
  return t;
}

}  // namespace

SpectrumReport verify_minimal_polynomial(ShuffleFamily f, int n, long a, std::size_t rank_limit) {
  SpectrumReport rep;
  rep.family = f;
  rep.n = n;
  rep.a = a;
  rep.eigenvalues = shuffle_eigenvalues(f, n, a);
  const auto s = shuffle(f, n, a);
  const auto& lams = rep.eigenvalues;
  const std::size_t m = lams.size();

  std::vector<AlgebraElement> factor;
  for (const auto& l : lams) factor.push_back(shift(s, Rational(l)));
  // prefix[k] = Π_{i<k}, suffix[k] = Π_{i>=k}
  std::vector<AlgebraElement> prefix{AlgebraElement::identity(s.family(), n)}, suffix(m + 1, prefix[0]);
  for (std::size_t k = 0; k < m; ++k) prefix.push_back(prefix.back() * factor[k]);
  for (std::size_t k = m; k-- > 0;) suffix[k] = factor[k] * suffix[k + 1];
  rep.annihilation = prefix[m].is_zero();
  rep.minimal = true;
  for (std::size_t k = 0; k < m; ++k)
    if ((prefix[k] * suffix[k + 1]).is_zero()) {
      rep.minimal = false;
      rep.redundant.push_back(lams[k]);
    }

  const auto& cat = FaceCatalog::get(s.family(), n);
  rep.chambers = cat.chambers().size();
  for (std::size_t k = 0; k < m; ++k) {
    // E_λ = Π_{μ≠λ} (S_a - μ)/(λ - μ)
    auto e = prefix[k] * suffix[k + 1];
    Rational denom = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (i != k) denom *= Rational(lams[k] - lams[i]);
    Rational tr = operator_trace(e) / denom;
    if (tr.get_den() != 1) throw std::logic_error("non-integral multiplicity");
    rep.multiplicities.push_back(tr.get_num());
  }

  // rank certificate: multiplicity == N - rank(M - λ) mod p
  if (rep.annihilation && rep.chambers <= rank_limit) {
    rep.rank_checked = true;
    auto op = transition_operator(s);
    const std::uint64_t p = linalg::kPrime;
    rep.ranks_agree = true;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<std::vector<std::uint64_t>> rows(rep.chambers, std::vector<std::uint64_t>(rep.chambers));
      for (std::size_t i = 0; i < rep.chambers; ++i)
        for (std::size_t j = 0; j < rep.chambers; ++j) {
          Rational v = op.matrix[i][j];
          if (i == j) v -= Rational(lams[k]);
          rows[i][j] = linalg::reduce_mod(v, p);
        }
      auto r = linalg::rank_mod(std::move(rows), p);
      if (Integer(static_cast<unsigned long>(rep.chambers - r)) != rep.multiplicities[k]) rep.ranks_agree = false;
    }
  }
  return rep;
}

bool stirling_identity_check(ShuffleFamily f, int n, long a) {
  check_family_rank(f, n);
  if (!valid_shuffle_index(f, a)) throw std::invalid_argument("invalid shuffle index");
  const bool riffle = f == ShuffleFamily::RiffleA;
  if (info(f).arity != Arity::Additive && !riffle)
    throw std::invalid_argument("identity defined for additive families and riffleA");
  auto p = polynomial_from_roots(shuffle_eigenvalues(f, n, a));

  if (riffle) {
    // S_{a^k} = Σ_j C(a^k, j) σ_{j-1}
    for (int j = 1; j <= n; ++j) {
      Integer sum;
      Integer ak = 1;
      for (std::size_t k = 0; k < p.size(); ++k) {
        Integer b;
        mpz_bin_ui(b.get_mpz_t(), ak.get_mpz_t(), static_cast<unsigned long>(j));
        sum += p[k] * b;
        ak *= a;
      }
      if (sum != 0) return false;
    }
    return true;
  }

  // S_{ka} = Σ_j T(ka, j) σ_j, then fold σ_n onto σ_{n-1}.
  auto coeff = [&](unsigned b, int j) -> Integer {
    return f == ShuffleFamily::SideA ? stirling2(b, j) : signed_stirling(b, j);
  };
  const int fold = f == ShuffleFamily::SideA ? 1 : 2;
  const int top = f == ShuffleFamily::SideB ? n : n - 1;
  for (int j = 0; j <= top; ++j) {
    Integer sum;
    for (std::size_t k = 0; k < p.size(); ++k) {
      unsigned b = static_cast<unsigned>(k * a);
      Integer c = coeff(b, j);
      if (j == n - 1 && f != ShuffleFamily::SideB) c += fold * coeff(b, n);
      sum += p[k] * c;
    }
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace coxshuffle
