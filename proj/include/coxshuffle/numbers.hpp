#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxshuffle/rational.hpp"

namespace coxshuffle {

enum class StirlingKind { Plain, Signed, QA, QSymplectic, QOrthogonal };

std::string_view to_string(StirlingKind kind);
StirlingKind parse_stirling_kind(std::string_view name);

// Stirling numbers of the second kind, by recursion and by the alternating sum.
Integer stirling2(unsigned a, unsigned j);
Integer stirling2_explicit(unsigned a, unsigned j);

// S(a,j) = 2j S(a-1,j) + S(a-1,j-1); equals 2^(a-j) stirling2(a,j).
Integer signed_stirling(unsigned a, unsigned j);
Integer signed_stirling_explicit(unsigned a, unsigned j);

// [j] = 1 + q + ... + q^(j-1).
Integer q_number(unsigned j, long q);

// S(a,j) = c_j S(a-1,j) + q^(j-1) S(a-1,j-1), S(0,0) = 1, where c_j is
//   QA:          [j]
//   QSymplectic: (1 + q^(2n-j)) [j]
//   QOrthogonal: (1 + q^(2n-j-1)) [j]
// Plain and Signed ignore q and n. The symplectic and orthogonal kinds
// reject j > n since the building has no faces of that rank.
Integer q_stirling(StirlingKind kind, unsigned a, unsigned j, long q = 1, int n = 0);

// Coefficient multiplying S(a-1,j) in the recursion of `kind`.
Integer stirling_multiplier(StirlingKind kind, unsigned j, long q, int n);

struct CoefficientTable {
  StirlingKind kind = StirlingKind::Plain;
  long q = 1;
  int n = 0;
  std::vector<std::vector<Integer>> values;  // values[a][j]

  const Integer& at(unsigned a, unsigned j) const { return values.at(a).at(j); }
};

CoefficientTable coefficient_table(StirlingKind kind, unsigned max_a, unsigned max_j, long q = 1,
                                   int n = 0);

// Coefficients (constant term first) of prod_{m=0}^{j-1} (x - offset - step*m).
std::vector<Integer> shifted_falling_polynomial(unsigned j, long step, long offset);

// c_ij for i = 1..j: coefficient of x^i in x(x-1)...(x-j+1). Entry k is c_{k+1,j}.
std::vector<Integer> riffle_coefficients(unsigned j);

// Coefficients (constant term first) of prod (x - root).
std::vector<Integer> polynomial_from_roots(const std::vector<Integer>& roots);

}  // namespace coxshuffle
