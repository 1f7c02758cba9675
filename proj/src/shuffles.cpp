#include <algorithm>
#include <array>
#include <stdexcept>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/numbers.hpp"

namespace coxshuffle {

namespace {

constexpr std::array<ShuffleFamilyInfo, 7> kFamilies{{
    {ShuffleFamily::SideA, "sideA", Family::A, Arity::Additive},
    {ShuffleFamily::TwoSidedA, "twoSidedA", Family::A, Arity::Additive},
    {ShuffleFamily::RiffleA, "riffleA", Family::A, Arity::Multiplicative},
    {ShuffleFamily::SideB, "sideB", Family::B, Arity::Additive},
    {ShuffleFamily::RiffleB, "riffleB", Family::B, Arity::Multiplicative},
    {ShuffleFamily::SideD, "sideD", Family::D, Arity::Additive},
    {ShuffleFamily::RiffleD, "riffleD", Family::D, Arity::Multiplicative},
}};

std::uint32_t initial_segment(int j) { return (1u << j) - 1; }

using Coords = std::vector<Rational>;

Coords zero_coords(Family family, int n) { return Coords(std::size_t{1} << label_count(family, n), 0); }

void add_types_of_size(Coords& c, int size, const Rational& v, std::uint32_t require = 0,
                       std::uint32_t forbid = 0) {
  for (std::uint32_t b = 0; b < c.size(); ++b)
    if (__builtin_popcount(b) == size && (b & require) == require && (b & forbid) == 0) c[b] += v;
}

// σ_j (or σ'_j) in the σ_J basis.
Coords sigma_coords(ShuffleFamily f, int n, int j, bool primed) {
  const auto& fi = info(f);
  check_family_rank(f, n);
  if (primed && !is_riffle_double(f)) throw std::invalid_argument("only riffle doubles have primed elements");
  if (j < 0 || j > sigma_top(f, n))
    throw std::invalid_argument("sigma index " + std::to_string(j) + " out of range for " + std::string(fi.name));
  Coords c = zero_coords(fi.complex, n);
  if (j == 0) {
    c[0] = 1;
    return c;
  }
  const std::uint32_t full = (1u << label_count(fi.complex, n)) - 1;
  switch (f) {
    case ShuffleFamily::SideA:
      c[initial_segment(std::min(j, n - 1))] = 1;
      break;
    case ShuffleFamily::TwoSidedA: {
      int jj = std::min(j, n - 1);
      Rational scale = j == n ? 2 : 1;
      for (int k = 0; k <= jj; ++k) {
        // first k labels and last jj-k labels of s_1..s_{n-1}
        std::uint32_t J = initial_segment(k) | (initial_segment(jj - k) << (n - 1 - (jj - k)));
        c[J] += scale * Rational(binomial(jj, k));
      }
      break;
    }
    case ShuffleFamily::RiffleA:
      add_types_of_size(c, j, 1);
      break;
    case ShuffleFamily::SideB:
      c[initial_segment(j)] = 1;
      break;
    case ShuffleFamily::RiffleB:
      if (primed) add_types_of_size(c, j, 1);
      else add_types_of_size(c, j, 1, 1u << (n - 1));
      break;
    case ShuffleFamily::SideD:
      if (j <= n - 2) c[initial_segment(j)] = 1;
      else c[full] = j == n ? 2 : 1;
      break;
    case ShuffleFamily::RiffleD: {
      const std::uint32_t u = 1u << (n - 2), v = 1u << (n - 1);
      add_types_of_size(c, j, 1, u);
      add_types_of_size(c, j, 1, v);
      if (primed) {
        add_types_of_size(c, j, 1, 0, u | v);
        if (j + 1 <= n) add_types_of_size(c, j + 1, 1, u | v);
      }
      break;
    }
  }
  return c;
}

}  // namespace

const ShuffleFamilyInfo& info(ShuffleFamily f) { return kFamilies[static_cast<std::size_t>(f)]; }

std::span<const ShuffleFamilyInfo> shuffle_families() { return kFamilies; }

std::string_view to_string(ShuffleFamily f) { return info(f).name; }

ShuffleFamily parse_shuffle_family(std::string_view name) {
  for (const auto& fi : kFamilies)
    if (fi.name == name) return fi.id;
  throw std::invalid_argument("unknown shuffle family: " + std::string(name));
}

bool is_riffle_double(ShuffleFamily f) { return f == ShuffleFamily::RiffleB || f == ShuffleFamily::RiffleD; }

bool valid_shuffle_index(ShuffleFamily f, long a) {
  return info(f).arity == Arity::Additive ? a >= 0 : a >= 1;
}

void check_family_rank(ShuffleFamily f, int n) {
  if (n < 2 || n > kMaxRank)
    throw std::invalid_argument("rank n=" + std::to_string(n) + " outside [2," + std::to_string(kMaxRank) +
                                "] for " + std::string(info(f).name));
}

int sigma_top(ShuffleFamily f, int n) { return f == ShuffleFamily::RiffleA ? n - 1 : n; }

AlgebraElement sigma(ShuffleFamily f, int n, int j, bool primed) {
  return from_invariant_coordinates(info(f).complex, n, sigma_coords(f, n, j, primed));
}

namespace {

Coords shuffle_coords(ShuffleFamily f, int n, long a) {
  const auto& fi = info(f);
  check_family_rank(f, n);
  if (!valid_shuffle_index(f, a))
    throw std::invalid_argument("invalid shuffle index a=" + std::to_string(a) + " for " + std::string(fi.name));
  Coords c = zero_coords(fi.complex, n);
  auto accumulate = [&](const Integer& coef, int j, bool primed) {
    if (coef == 0) return;
    auto s = sigma_coords(f, n, j, primed);
    for (std::size_t b = 0; b < c.size(); ++b) c[b] += Rational(coef) * s[b];
  };
  const auto ua = static_cast<unsigned>(a);
  switch (f) {
    case ShuffleFamily::SideA:
      for (int j = 0; j <= n; ++j) accumulate(stirling2(ua, static_cast<unsigned>(j)), j, false);
      break;
    case ShuffleFamily::TwoSidedA:
    case ShuffleFamily::SideB:
    case ShuffleFamily::SideD:
      for (int j = 0; j <= n; ++j) accumulate(signed_stirling(ua, static_cast<unsigned>(j)), j, false);
      break;
    case ShuffleFamily::RiffleA:
      for (int j = 1; j <= n; ++j) accumulate(binomial(a, j), j - 1, false);
      break;
    case ShuffleFamily::RiffleB:
    case ShuffleFamily::RiffleD: {
      long b = a / 2;
      if (a % 2 == 0) {
        for (int j = 1; j <= n; ++j) accumulate(binomial(b, j), j, false);
      } else {
        for (int j = 0; j <= n; ++j) accumulate(binomial(b, j), j, true);
      }
      break;
    }
  }
  return c;
}

}  // namespace

AlgebraElement shuffle(ShuffleFamily f, int n, long a) {
  return from_invariant_coordinates(info(f).complex, n, shuffle_coords(f, n, a));
}

// ---- idempotents --------------------------------------------------------------

Integer Character::value(long a) const {
  switch (kind) {
    case Kind::Power: return coxshuffle::power(Integer(c), static_cast<unsigned long>(a));
    case Kind::Exponent: return coxshuffle::power(Integer(a), static_cast<unsigned long>(c));
    case Kind::OddOnly: return a % 2 == 0 ? Integer(0) : coxshuffle::power(Integer(a), static_cast<unsigned long>(c));
  }
  return 0;
}

std::string Character::to_string() const {
  switch (kind) {
    case Kind::Power: return std::to_string(c) + "^a";
    case Kind::Exponent: return "a^" + std::to_string(c);
    case Kind::OddOnly: return "[a odd] a^" + std::to_string(c);
  }
  return "?";
}

AlgebraElement idempotent(ShuffleFamily f, int n, int i, bool primed) {
  const auto& fi = info(f);
  check_family_rank(f, n);
  if (primed && !is_riffle_double(f)) throw std::invalid_argument("only riffle doubles have primed idempotents");
  Coords c = zero_coords(fi.complex, n);
  auto accumulate = [&](const Rational& coef, int j, bool pr) {
    if (coef == 0) return;
    auto s = sigma_coords(f, n, j, pr);
    for (std::size_t b = 0; b < c.size(); ++b) c[b] += coef * s[b];
  };
  switch (f) {
    case ShuffleFamily::SideA:
    case ShuffleFamily::TwoSidedA:
    case ShuffleFamily::SideB:
    case ShuffleFamily::SideD: {
      if (i < 0 || i > n) throw std::invalid_argument("idempotent index out of range");
      bool plain = f == ShuffleFamily::SideA;
      for (int j = i; j <= n; ++j) {
        Integer den = factorial(static_cast<unsigned>(j)) * (plain ? Integer(1) : coxshuffle::power(2, static_cast<unsigned>(j)));
        Integer num = binomial(j, i) * ((j - i) % 2 ? -1 : 1);
        accumulate(make_rational(num, den), j, false);
      }
      break;
    }
    case ShuffleFamily::RiffleA: {
      if (i < 1 || i > n) throw std::invalid_argument("idempotent index out of range");
      for (int j = i; j <= n; ++j) {
        auto cj = riffle_coefficients(static_cast<unsigned>(j));
        accumulate(make_rational(cj[static_cast<std::size_t>(i - 1)], factorial(static_cast<unsigned>(j))), j - 1, false);
      }
      break;
    }
    case ShuffleFamily::RiffleB:
    case ShuffleFamily::RiffleD: {
      if (i < 0 || i > n) throw std::invalid_argument("idempotent index out of range");
      for (int j = std::max(i, primed ? 0 : 1); j <= n; ++j) {
        auto poly = shifted_falling_polynomial(static_cast<unsigned>(j), 2, primed ? 1 : 0);
        Integer den = coxshuffle::power(2, static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(j));
        accumulate(make_rational(poly[static_cast<std::size_t>(i)], den), j, primed);
      }
      break;
    }
  }
  return from_invariant_coordinates(fi.complex, n, c);
}

std::vector<IdempotentComponent> idempotents(ShuffleFamily f, int n) {
  check_family_rank(f, n);
  std::vector<IdempotentComponent> out;
  auto e = [](int i) { return "e_" + std::to_string(i); };
  switch (f) {
    case ShuffleFamily::SideA:
    case ShuffleFamily::TwoSidedA:
    case ShuffleFamily::SideB:
    case ShuffleFamily::SideD: {
      long scale = f == ShuffleFamily::SideA ? 1 : 2;
      for (int i = 0; i <= n; ++i) {
        // e_{n-1} vanishes where σ_n is tied to σ_{n-1}
        if (i == n - 1 && f != ShuffleFamily::SideB) continue;
        out.push_back({e(i), idempotent(f, n, i), {Character::Kind::Power, scale * i}});
      }
      break;
    }
    case ShuffleFamily::RiffleA:
      for (int i = 1; i <= n; ++i) out.push_back({e(i), idempotent(f, n, i), {Character::Kind::Exponent, i}});
      break;
    case ShuffleFamily::RiffleB:
    case ShuffleFamily::RiffleD:
      for (int i = 1; i <= n; ++i) out.push_back({e(i), idempotent(f, n, i), {Character::Kind::Exponent, i}});
      for (int i = 0; i < n; ++i) {
        // in D, σ'_{n-1} = σ_{n-1} + σ_n/2 so this component is empty
        if (f == ShuffleFamily::RiffleD && i == n - 1 && i > 0) continue;
        auto x = idempotent(f, n, i, true);
        std::string label = "e'_" + std::to_string(i);
        if (i > 0) {
          x -= idempotent(f, n, i);
          label += " - " + e(i);
        }
        out.push_back({label, x, {Character::Kind::OddOnly, i}});
      }
      break;
  }
  return out;
}

namespace {

std::vector<Character> characters(ShuffleFamily f, int n) {
  std::vector<Character> out;
  switch (f) {
    case ShuffleFamily::SideA:
    case ShuffleFamily::TwoSidedA:
    case ShuffleFamily::SideB:
    case ShuffleFamily::SideD: {
      long scale = f == ShuffleFamily::SideA ? 1 : 2;
      for (int i = 0; i <= n; ++i)
        if (i != n - 1 || f == ShuffleFamily::SideB) out.push_back({Character::Kind::Power, scale * i});
      break;
    }
    case ShuffleFamily::RiffleA:
      for (int i = 1; i <= n; ++i) out.push_back({Character::Kind::Exponent, i});
      break;
    case ShuffleFamily::RiffleB:
    case ShuffleFamily::RiffleD:
      for (int i = 1; i <= n; ++i) out.push_back({Character::Kind::Exponent, i});
      for (int i = 0; i < n; ++i)
        if (f == ShuffleFamily::RiffleB || i != n - 1 || i == 0) out.push_back({Character::Kind::OddOnly, i});
      break;
  }
  return out;
}

}  // namespace

Integer character_value(ShuffleFamily f, int n, std::size_t component, long a) {
  check_family_rank(f, n);
  if (!valid_shuffle_index(f, a)) throw std::invalid_argument("invalid shuffle index");
  auto chars = characters(f, n);
  if (component >= chars.size()) throw std::invalid_argument("character index out of range");
  return chars[component].value(a);
}

std::vector<Integer> shuffle_eigenvalues(ShuffleFamily f, int n, long a) {
  check_family_rank(f, n);
  if (!valid_shuffle_index(f, a)) throw std::invalid_argument("invalid shuffle index");
  std::vector<Integer> out;
  for (const auto& ch : characters(f, n)) {
    auto v = ch.value(a);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace coxshuffle
