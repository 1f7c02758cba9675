#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxshuffle/check.hpp"
#include "coxshuffle/faces.hpp"
#include "coxshuffle/fq.hpp"
#include "coxshuffle/rational.hpp"

namespace coxshuffle {

// glnA: flags of proper nonzero subspaces of GF(q)^n.
// symplecticB / orthogonalB: flags of isotropic subspaces of GF(q)^{2n}.
// oriflammeD: same space as orthogonalB; a face is stored as the isotropic
// chain it lifts to, with the dim-n member dropped whenever a dim-(n-1)
// member is present (that member fixes both maximal subspaces above it).
enum class BuildingKind { GlnA, SymplecticB, OrthogonalB, OriflammeD };

std::string_view to_string(BuildingKind k);
BuildingKind parse_building_kind(std::string_view name);
Family coxeter_family(BuildingKind k);

struct FlagFace {
  std::vector<Geometry::Id> chain;  // strictly increasing
  friend auto operator<=>(const FlagFace&, const FlagFace&) = default;
};

class FlagElement {
 public:
  const std::map<FlagFace, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const FlagFace& f) const;
  Integer coefficient_sum() const;
  void add_term(const FlagFace& f, const Integer& c);
  FlagElement& operator+=(const FlagElement& y);
  FlagElement& operator-=(const FlagElement& y);
  FlagElement& operator*=(const Integer& c);
  friend bool operator==(const FlagElement&, const FlagElement&) = default;

 private:
  std::map<FlagFace, Integer> terms_;
};

FlagElement operator+(FlagElement x, const FlagElement& y);
FlagElement operator-(FlagElement x, const FlagElement& y);
FlagElement operator*(const Integer& c, FlagElement x);

// A frame of lines. glnA: n independent lines. Polar: e_1,f_1,...,e_n,f_n
// (lines[2i], lines[2i+1]) forming hyperbolic pairs.
struct Frame {
  std::vector<Geometry::Id> lines;
};

class Building {
 public:
  Building(BuildingKind kind, int n, long q);

  BuildingKind kind() const { return kind_; }
  int n() const { return n_; }
  long q() const { return q_; }
  Geometry& geometry() { return geo_; }

  // Validates and canonicalizes (oriflammeD drops a redundant dim-n member).
  FlagFace make_face(std::vector<Geometry::Id> chain);
  FlagFace identity() const { return {}; }
  const std::vector<FlagFace>& faces();
  std::vector<FlagFace> faces_of_type(const FaceType& t);
  FaceType type(const FlagFace& f);
  bool is_chamber(const FlagFace& f);
  std::vector<int> dims(const FlagFace& f) const;
  std::string to_string(const FlagFace& f) const;

  // Jordan-Hölder refinement (self-dual chains for the polar kinds).
  FlagFace product(const FlagFace& x, const FlagFace& y);
  FlagElement multiply(const FlagElement& x, const FlagElement& y);

  // Product computed inside an apartment containing both faces.
  FlagFace product_via_apartment(const FlagFace& x, const FlagFace& y);
  std::optional<Frame> common_frame(const FlagFace& x, const FlagFace& y);
  bool frame_contains(const Frame& fr, const FlagFace& f);
  Face to_coxeter(const Frame& fr, const FlagFace& f);
  FlagFace from_coxeter(const Frame& fr, const Face& c);
  FlagFace product_in_frame(const Frame& fr, const FlagFace& x, const FlagFace& y);
  // Every frame, one per apartment; brute force, small cases only.
  std::vector<Frame> all_frames();

  // σ_j: sum of the faces of type {s_1..s_j}, 0 <= j <= sigma_top(). oriflammeD:
  // σ_{n-1} is the chamber sum and σ_n = 2σ_{n-1}.
  FlagElement sigma(int j);
  int sigma_top() const { return kind_ == BuildingKind::GlnA ? n_ - 1 : n_; }

  // Maximal isotropic subspaces containing a subspace (polar kinds).
  std::vector<Geometry::Id> maximal_containing(Geometry::Id w);

 private:
  bool polar() const { return kind_ != BuildingKind::GlnA; }
  std::vector<Geometry::Id> full_chain(const FlagFace& f);
  FlagFace jordan_holder(const std::vector<Geometry::Id>& e, const std::vector<Geometry::Id>& f, int max_dim);
  FlagFace d_canonical(FlagFace f) const;
  const std::vector<Geometry::Id>& lines();
  bool search_frame(Geometry::Id w, std::vector<Geometry::Id> members, std::vector<Geometry::Id>& out);

  BuildingKind kind_;
  int n_;
  long q_;
  Geometry geo_;
  Geometry::Id e_space_ = 0;  // <e_1..e_n>, for the u/v class
  std::vector<FlagFace> faces_;
  std::vector<Geometry::Id> lines_;
  std::map<int, std::vector<Geometry::Id>> by_dim_;
};

// Δ(B_n) -> Δ(D_n): a flag of the orthogonal building to the oriflamme face,
// re-interned in the target geometry.
FlagFace building_map_B_to_D(Building& orth, Building& ori, const FlagFace& f);

// Number of faces of type {s_1..s_j} predicted by the q-count formulas.
Integer predicted_face_count(BuildingKind k, int n, long q, int j);
// Diagonal multiplier c_j in σ_j σ_1 = c_j σ_j + q^j σ_{j+1}.
Integer q_multiplier(BuildingKind k, int n, long q, int j);
// Roots of the minimal polynomial of σ_1.
std::vector<Integer> q_minimal_roots(BuildingKind k, int n, long q);

struct NonAssociativeTriple {
  FlagFace x, y, z;
};
std::optional<NonAssociativeTriple> find_non_associative_triple(Building& b);

// Face counts, σ_j relations, counting identities, q-Stirling expansion of
// σ_1^a (a <= max_a), minimal polynomial and power associativity.
std::vector<Check> qshuffle_checks(BuildingKind k, int n, long q, int max_a = 4);
// Apartment independence: the product in every common apartment equals the
// refinement product, for all pairs of faces (brute-force frames).
Check apartment_independence(Building& b);

}  // namespace coxshuffle
