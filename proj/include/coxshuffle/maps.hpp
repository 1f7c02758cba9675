#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/check.hpp"

namespace coxshuffle {

// Forgetful maps obtained by deleting hyperplanes: B_n -> D_n -> A_{n-1}.
enum class ComplexMap { BtoD, DtoA, BtoA };

std::string_view to_string(ComplexMap m);
ComplexMap parse_complex_map(std::string_view name);  // "B-D", "D-A", "B-A"
Family source_family(ComplexMap m);
Family target_family(ComplexMap m);

Face map_B_to_D(const Face& f);
Face map_B_to_A(const Face& f);
Face map_D_to_A(const Face& f);
Face apply_map(ComplexMap m, const Face& f);

AlgebraElement push_element(ComplexMap m, const AlgebraElement& x);

struct HomomorphismReport {
  ComplexMap map;
  int n = 0;
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  bool exhaustive = false;
  bool ok() const { return failures == 0 && pairs > 0; }
};

// map(xy) == map(x)map(y): all pairs when samples == 0, else seeded random pairs.
HomomorphismReport verify_homomorphism(ComplexMap m, int n, std::uint64_t samples = 0,
                                       std::uint64_t seed = 1);

// Side chain: sideB σ_j -> sideD σ_j -> twoSidedA σ_j and S_a -> S_a -> S_a.
std::vector<Check> side_chain_checks(int n, long max_a = 6);
// riffleB σ_j, σ'_j -> riffleD σ_j, σ'_j and whether the images stay independent.
std::vector<Check> riffle_double_checks(int n);
// riffleB S_a -> riffleA S_a and σ_t -> Σ σ_{s_i} + 2.
std::vector<Check> riffle_to_A_checks(int n, long max_a = 6);

}  // namespace coxshuffle
