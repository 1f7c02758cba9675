#pragma once

#include <string>
#include <vector>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/linalg.hpp"

namespace coxshuffle {

// Left multiplication by an element, acting on chambers in catalog order.
// Entry (c', c) is the total coefficient of faces x with x·c == c'.
struct TransitionOperator {
  Family family;
  int n;
  AlgebraElement source;
  linalg::Matrix matrix;

  std::size_t size() const { return matrix.size(); }
  // Column sums after dividing by the coefficient sum.
  linalg::Matrix normalized() const;
};

TransitionOperator transition_operator(const AlgebraElement& x);

linalg::Matrix matmul(const linalg::Matrix& x, const linalg::Matrix& y);
// "num/den" entries, one row per line.
std::string matrix_csv(const linalg::Matrix& m);

struct SpectrumReport {
  ShuffleFamily family;
  int n = 0;
  long a = 0;
  std::vector<Integer> eigenvalues;     // distinct character values
  std::vector<Integer> multiplicities;  // trace of each spectral projector
  bool annihilation = false;            // Π (S_a - λ) == 0 in the algebra
  bool minimal = false;                 // no factor can be dropped
  std::vector<Integer> redundant;       // factors that could be dropped
  bool rank_checked = false;
  bool ranks_agree = false;             // N - rank_p(M - λ) matches every multiplicity
  std::size_t chambers = 0;

  bool ok() const { return annihilation && minimal && (!rank_checked || ranks_agree); }
};

// The rank certificate is skipped (rank_checked false) above rank_limit chambers.
SpectrumReport verify_minimal_polynomial(ShuffleFamily f, int n, long a, std::size_t rank_limit = 1000);

// p(x) = Π (x - λ) expanded; p(S_a) = Σ p_k S_{ka} must vanish coefficientwise
// in the σ_j basis. Checked purely with Stirling / binomial numbers.
// Additive families and riffleA.
bool stirling_identity_check(ShuffleFamily f, int n, long a);

}  // namespace coxshuffle
