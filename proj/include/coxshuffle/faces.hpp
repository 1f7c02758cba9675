#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxshuffle {

enum class Family : std::uint8_t { A, B, D };

inline constexpr int kMaxRank = 8;

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

// Throws std::invalid_argument unless 1 <= n <= kMaxRank (n >= 2 for D).
void check_rank(Family f, int n);

// Number of type labels: A n-1, B n, D n.
int label_count(Family f, int n);

// Subset of the label set, one bit per label.
//   A: s_1..s_{n-1}          -> bits 0..n-2
//   B: s_1..s_{n-1}, t       -> bits 0..n-1
//   D: s_1..s_{n-2}, u, v    -> bits 0..n-1 (u = bit n-2, v = bit n-1)
class FaceType {
 public:
  FaceType() = default;
  FaceType(Family family, int n, std::uint32_t bits);

  static FaceType empty(Family family, int n) { return {family, n, 0}; }
  static FaceType full(Family family, int n);
  // Parses "{s1,s2,t}", "s_1,u" and "{}".
  static FaceType parse(Family family, int n, std::string_view text);
  static FaceType from_labels(Family family, int n, const std::vector<std::string>& labels);

  Family family() const { return family_; }
  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int size() const;
  bool contains(std::string_view label) const;
  std::vector<std::string> labels() const;
  std::string to_string() const;

  friend bool operator==(const FaceType&, const FaceType&) = default;

 private:
  Family family_ = Family::A;
  std::int8_t n_ = 0;
  std::uint32_t bits_ = 0;
};

std::string label_name(Family family, int n, int bit);

// A face of the Coxeter complex of type A_{n-1}, B_n or D_n.
//
// Stored as one small integer per coordinate x_1..x_n, read as the relative
// position of x_i:
//   A: index of the block holding i, blocks numbered 0,1,.. from the left.
//   B: with k signed blocks B_1..B_k, i in B_m gives -(k+1-m), the barred
//      letter in B_m gives +(k+1-m), and the zero block gives 0.
//   D: as B, with the central block at 0. A central block {i,-i} stands for
//      the merged pair of singletons, so in canonical form a face never has
//      an empty central block together with a single coordinate of level +-1.
class Face {
 public:
  Face() = default;

  static Face identity(Family family, int n);
  // Levels of any magnitude are accepted and canonicalized.
  static Face from_levels(Family family, int n, std::span<const int> levels);
  // Canonical text: A "({2}|{1,3,4})", B "({2}|{-3}|Z:{1})", D "({2,-3}|C:{1,-1})".
  static Face parse(Family family, int n, std::string_view text);
  // Ordered deck, top card first. Entries are signed letters for B and D
  // (negative = card flipped). For D the sign of the bottom card is ignored.
  static Face from_deck(Family family, std::span<const int> deck);

  Family family() const { return family_; }
  int n() const { return n_; }
  int level(int coordinate) const { return levels_[static_cast<std::size_t>(coordinate)]; }
  std::vector<int> levels() const;

  // Signed blocks left to right (all blocks for A), letters sorted by |x|.
  std::vector<std::vector<int>> blocks() const;
  // Positive letters of the zero (B) or central (D) block; empty for A.
  std::vector<int> zero_block() const;
  // Number of coordinates at level 0 (B, D).
  int zero_count() const;
  // Number of signed blocks (B, D) or blocks (A).
  int block_count() const;

  FaceType type() const;
  int rank() const { return type().size(); }
  bool is_chamber() const;
  bool is_identity() const;

  // Deck of a chamber, top card first; throws if not a chamber.
  std::vector<int> deck() const;

  std::string to_string() const;
  std::uint64_t key() const;

  friend bool operator==(const Face& x, const Face& y) {
    return x.family_ == y.family_ && x.n_ == y.n_ && x.levels_ == y.levels_;
  }
  friend std::strong_ordering operator<=>(const Face& x, const Face& y) {
    return x.key() <=> y.key();
  }

 private:
  Family family_ = Family::A;
  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> levels_{};

  friend Face product(const Face& x, const Face& y);
  friend Face canonical_face(Family family, int n, const int* values);
};

// Canonical face from raw position values (see Face); values[i] for x_{i+1}.
Face canonical_face(Family family, int n, const int* values);

// Projection product xy: x refined by y. Throws on family or n mismatch.
Face product(const Face& x, const Face& y);
inline Face operator*(const Face& x, const Face& y) { return product(x, y); }

Face product_A(const Face& x, const Face& y);
Face product_B(const Face& x, const Face& y);
Face product_D(const Face& x, const Face& y);

// x <= y iff xy == y.
bool is_face_of(const Face& x, const Face& y);

FaceType face_type(const Face& f);

// Faces sorted by canonical text; optionally restricted to one type.
std::vector<Face> enumerate_faces(Family family, int n,
                                  std::optional<FaceType> type_filter = std::nullopt);

// Signs of a face on the reflection arrangement. Hyperplane order:
// x_i = x_j for i < j (lex), then x_i = -x_j, then x_i = 0. D drops the last
// group and A keeps only the first. Sign is that of x_i - x_j, x_i + x_j, x_i.
class SignVector {
 public:
  SignVector() = default;
  // Throws std::invalid_argument unless the signs come from a face.
  SignVector(Family family, int n, std::vector<std::int8_t> signs);

  static SignVector of(const Face& f);
  static std::size_t hyperplane_count(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }
  Face face() const;
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  struct Unchecked {};
  SignVector(Family family, int n, std::vector<std::int8_t> signs, Unchecked);

  Family family_ = Family::A;
  int n_ = 0;
  std::vector<std::int8_t> signs_;

  friend SignVector sign_vector_product(const SignVector&, const SignVector&);
};

// Componentwise: keep the sign of x where nonzero, else take y's.
SignVector sign_vector_product(const SignVector& x, const SignVector& y);

// Drop hyperplane groups to move from the B arrangement to D or A, or from D to A.
std::vector<std::int8_t> project_signs(Family from, Family to, int n,
                                       const std::vector<std::int8_t>& signs);

// All faces of one complex, indexed; cached per (family, n) for the process.
class FaceCatalog {
 public:
  static const FaceCatalog& get(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Face>& chambers() const { return chambers_; }
  const std::vector<FaceType>& types() const { return types_; }  // sorted by bits
  const std::vector<std::size_t>& faces_of_type(FaceType t) const;
  std::optional<std::size_t> index_of(const Face& f) const;
  std::size_t chamber_index(const Face& c) const;
  // Number of chambers having a face of type t among their faces.
  std::size_t chambers_containing(FaceType t) const;
  std::optional<Face> from_signs(const std::vector<std::int8_t>& signs) const;

 private:
  FaceCatalog(Family family, int n);

  Family family_;
  int n_;
  std::vector<Face> faces_;
  std::vector<Face> chambers_;
  std::vector<FaceType> types_;
  std::vector<std::vector<std::size_t>> by_type_;  // indexed by type bits
  std::vector<std::size_t> containing_;            // indexed by type bits
  std::vector<std::uint32_t> dense_;               // code -> index + 1
  std::vector<std::uint32_t> chamber_dense_;
};

// Dense integer code of a face, usable as an array index (see FaceCatalog).
std::uint64_t face_code(const Face& f);
std::uint64_t face_code_limit(Family family, int n);

}  // namespace coxshuffle

template <>
struct std::hash<coxshuffle::Face> {
  std::size_t operator()(const coxshuffle::Face& f) const noexcept {
    std::uint64_t k = f.key();
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};
