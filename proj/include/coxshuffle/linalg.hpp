#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxshuffle/rational.hpp"

namespace coxshuffle::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

std::size_t rank(Matrix rows);

// Some x with Σ x_i basis[i] == target, or nullopt when target is outside the span.
std::optional<Vector> solve_combination(const std::vector<Vector>& basis, const Vector& target);

// 2^61 - 1
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
// num/den mod p; throws std::domain_error when p divides den.
std::uint64_t reduce_mod(const Rational& x, std::uint64_t p);
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

}  // namespace coxshuffle::linalg
