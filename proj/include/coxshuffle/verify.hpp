#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/check.hpp"

namespace coxshuffle {

// Thrown for requests beyond the exact suites' size limits (A n <= 7, B/D n <= 5).
struct ScaleLimit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void check_verify_scale(ShuffleFamily f, int n);

// semigroup, idempotents, characters, minpoly, stirling, axioms, double, maps
const std::vector<std::string>& verify_suite_names();
// Suites that apply to a family (double: riffleB/riffleD; maps: sideB, riffleB; stirling: additive and riffleA).
std::vector<std::string> applicable_suites(ShuffleFamily f);

std::vector<Check> verify_suite(ShuffleFamily f, int n, std::string_view suite);
// Empty `suites` runs every applicable suite.
std::vector<Check> run_verify(ShuffleFamily f, int n, const std::vector<std::string>& suites = {});

}  // namespace coxshuffle
