#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxshuffle {

bool is_prime(long q);

enum class FormKind { None, Symplectic, Orthogonal };
std::string_view to_string(FormKind k);

// Subspaces of V = GF(q)^dim, interned by reduced row-echelon form.
// Vectors are lists of residues 0..q-1. With a form, dim = 2n and the basis is
// e_1..e_n, f_1..f_n:
//   symplectic  B(e_i, f_i) = 1, B(f_i, e_i) = -1
//   orthogonal  B(e_i, f_i) = B(f_i, e_i) = 1, Q(v) = Σ v_i v_{n+i}
// Caches grow as subspaces are touched; not thread-safe.
class Geometry {
 public:
  using Id = int;
  using Vec = std::vector<int>;

  Geometry(long q, int dim, FormKind form = FormKind::None);

  long q() const { return q_; }
  int dim() const { return dim_; }
  FormKind form() const { return form_; }
  std::size_t size() const { return spaces_.size(); }

  Id zero() const { return zero_; }
  Id whole() const { return whole_; }

  Id span(const std::vector<Vec>& vectors);
  Id sum(Id a, Id b);
  Id meet(Id a, Id b);
  Id perp(Id a);  // requires a form

  int dim_of(Id a) const { return spaces_[static_cast<std::size_t>(a)].dim; }
  const std::vector<Vec>& rref(Id a) const { return spaces_[static_cast<std::size_t>(a)].rows; }
  bool contains(Id big, Id small);
  bool contains_vector(Id a, const Vec& v);
  // Totally isotropic (symplectic) or totally singular (orthogonal).
  bool isotropic(Id a);

  int bilinear(const Vec& x, const Vec& y) const;
  int quadratic(const Vec& x) const;

  // All k-dimensional subspaces in RREF enumeration order.
  std::vector<Id> subspaces(int k, bool isotropic_only = false);
  std::vector<Vec> all_vectors() const;
  std::string to_string(Id a) const;  // rows as digit strings, "<100,011>"

 private:
  struct Space {
    int dim;
    std::vector<Vec> rows;
    std::vector<std::uint8_t> members;  // indexed by vector code, filled lazily
  };

  Id intern(std::vector<Vec> rows);
  const std::vector<std::uint8_t>& members(Id a);
  std::uint32_t code(const Vec& v) const;
  static std::uint64_t pair_key(Id a, Id b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  long q_;
  int dim_;
  FormKind form_;
  std::deque<Space> spaces_;  // stable references across interning
  std::unordered_map<std::string, Id> index_;
  std::unordered_map<std::uint64_t, Id> sum_cache_, meet_cache_;
  std::unordered_map<Id, Id> perp_cache_;
  std::unordered_map<Id, bool> iso_cache_;
  Id zero_ = 0, whole_ = 0;
};

// Reduced row-echelon form over GF(q), zero rows removed.
std::vector<Geometry::Vec> rref(std::vector<Geometry::Vec> rows, long q);

}  // namespace coxshuffle
