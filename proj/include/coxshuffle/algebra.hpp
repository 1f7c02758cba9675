#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxshuffle/faces.hpp"
#include "coxshuffle/rational.hpp"

namespace coxshuffle {

// Element of the semigroup algebra kΣ with exact rational coefficients.
// Zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Family family, int n);

  static AlgebraElement identity(Family family, int n);
  static AlgebraElement of_face(const Face& f, const Rational& c = 1);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::map<Face, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Face& f) const;
  void add_term(const Face& f, const Rational& c);
  Rational coefficient_sum() const;
  // Terms ordered by canonical face text.
  std::vector<std::pair<Face, Rational>> sorted_terms() const;
  std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.family_ == y.family_ && x.n_ == y.n_ && x.terms_ == y.terms_;
  }

 private:
  void check_same(const AlgebraElement& y) const;

  Family family_ = Family::A;
  int n_ = 0;
  std::map<Face, Rational> terms_;
};

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x);
AlgebraElement operator*(const Rational& c, AlgebraElement x);
AlgebraElement operator*(AlgebraElement x, const Rational& c);

// Direct: bilinear expansion over term pairs. Invariant: both factors must be
// W-invariant; uses type-level structure constants. Auto picks Invariant when
// both factors are invariant and the structure constants are affordable.
enum class ProductRoute { Auto, Direct, Invariant };

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                        ProductRoute route = ProductRoute::Auto);
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement power(const AlgebraElement& x, unsigned k);
// x - c·1
AlgebraElement shift(const AlgebraElement& x, const Rational& c);

// ---- the W-invariant subalgebra ------------------------------------------

// Sum of all faces of type J.
AlgebraElement sigma_J(FaceType J);
AlgebraElement sigma_J(Family family, int n, FaceType J);

// Coordinates in the σ_J basis, indexed by type bits; nullopt if x is not
// constant on every type class.
std::optional<std::vector<Rational>> invariant_coordinates(const AlgebraElement& x);
AlgebraElement from_invariant_coordinates(Family family, int n, const std::vector<Rational>& c);

// Structure constants: σ_J σ_K = Σ_L c(J,K,L) σ_L.
class InvariantStructure {
 public:
  static const InvariantStructure& get(Family family, int n);
  // Rough count of face products needed to build the table.
  static double build_cost(Family family, int n);

  std::int64_t constant(std::uint32_t J, std::uint32_t K, std::uint32_t L) const;
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  InvariantStructure(Family family, int n);

  std::size_t slots_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> table_;  // [J*slots+K] -> (L, c)
};

// ---- shuffle families -------------------------------------------------------

enum class ShuffleFamily { SideA, TwoSidedA, RiffleA, SideB, RiffleB, SideD, RiffleD };
enum class Arity { Additive, Multiplicative };

struct ShuffleFamilyInfo {
  ShuffleFamily id;
  std::string_view name;
  Family complex;
  Arity arity;
};

const ShuffleFamilyInfo& info(ShuffleFamily f);
std::span<const ShuffleFamilyInfo> shuffle_families();
ShuffleFamily parse_shuffle_family(std::string_view name);
std::string_view to_string(ShuffleFamily f);
bool is_riffle_double(ShuffleFamily f);  // RiffleB, RiffleD
// Additive families take a >= 0, multiplicative a >= 1.
bool valid_shuffle_index(ShuffleFamily f, long a);
// Throws std::invalid_argument unless 2 <= n <= kMaxRank.
void check_family_rank(ShuffleFamily f, int n);

// Highest j for which sigma(f, n, j) is defined: n, except RiffleA (n-1).
int sigma_top(ShuffleFamily f, int n);

// σ_j of the family (σ'_j when primed; only RiffleB and RiffleD have primes).
// σ_0 = 1. Conventions: SideA σ_n = σ_{n-1}; TwoSidedA and SideD σ_n = 2σ_{n-1}.
AlgebraElement sigma(ShuffleFamily f, int n, int j, bool primed = false);

// S_a as the defining combination of σ's.
AlgebraElement shuffle(ShuffleFamily f, int n, long a);

// ---- idempotents and characters ---------------------------------------------

// Scalar by which S_a acts on one idempotent component.
struct Character {
  enum class Kind {
    Power,      // c^a          (additive families)
    Exponent,   // a^c          (multiplicative)
    OddOnly,    // 0 for even a, a^c for odd a
  };
  Kind kind = Kind::Power;
  long c = 0;

  Integer value(long a) const;
  std::string to_string() const;
};

struct IdempotentComponent {
  std::string label;  // "e_2", "e'_1 - e_1"
  AlgebraElement element;
  Character character;
};

// The closed-form e_i (e'_i when primed), without dropping degenerate ones.
// SideA, TwoSidedA, SideB, SideD: i = 0..n. RiffleA: i = 1..n.
// RiffleB/D: e_i for i = 1..n, e'_i for i = 0..n (e_0 = 0).
AlgebraElement idempotent(ShuffleFamily f, int n, int i, bool primed = false);

// Complete orthogonal system with degenerate members dropped.
std::vector<IdempotentComponent> idempotents(ShuffleFamily f, int n);

// χ_i(S_a) for the i-th component of idempotents(f, n).
Integer character_value(ShuffleFamily f, int n, std::size_t component, long a);

// Distinct eigenvalues of S_a in component order, first occurrence kept.
std::vector<Integer> shuffle_eigenvalues(ShuffleFamily f, int n, long a);

// ---- axioms -------------------------------------------------------------------

// Which part of a riffle double algebra to examine.
enum class AlgebraPart { Whole, Even, Odd };

std::pair<ShuffleFamily, AlgebraPart> parse_algebra_id(std::string_view id);
std::string algebra_id(ShuffleFamily f, AlgebraPart part);

struct AxiomResult {
  int condition;  // 1..4
  bool passed;
  std::string detail;
};

struct AxiomReport {
  std::string algebra;
  int n = 0;
  std::size_t dimension = 0;
  std::vector<AxiomResult> results;

  bool passed(int condition) const;
  bool all_passed() const;
};

// (1) dim A <= rank(Σ) + 1; (2) one homogeneous basis element per rank;
// (3) A = k[σ_1]; (4) the shuffles S_a span A.
AxiomReport check_shuffle_algebra_axioms(ShuffleFamily f, int n, AlgebraPart part = AlgebraPart::Whole);

}  // namespace coxshuffle
