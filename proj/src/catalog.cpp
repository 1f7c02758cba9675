#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "coxshuffle/faces.hpp"

namespace coxshuffle {

namespace {

constexpr std::uint64_t kDenseLimit = 1u << 23;

int radix(Family family, int n) { return family == Family::A ? n : 2 * n + 1; }

void check_catalog_rank(Family family, int n) {
  check_rank(family, n);
  int limit = family == Family::A ? 8 : 6;
  if (n > limit)
    throw std::invalid_argument("full face enumeration is limited to n <= " + std::to_string(limit) +
                                " for family " + std::string(to_string(family)));
}

std::vector<Face> generate(Family family, int n) {
  std::vector<Face> out;
  int v[kMaxRank] = {};
  int abs_v[kMaxRank] = {};
  const int base = family == Family::A ? n : n + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(base);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int used = 0, top = 0;
    for (int i = 0; i < n; ++i) {
      abs_v[i] = static_cast<int>(c % static_cast<std::uint64_t>(base));
      c /= static_cast<std::uint64_t>(base);
      used |= 1 << abs_v[i];
      top = std::max(top, abs_v[i]);
    }
    // Levels must fill 0..top (A) or 1..top (B/D) without gaps.
    int need = (1 << (top + 1)) - 1;
    if (family != Family::A) need &= ~1;
    if ((used & need) != need) continue;
    if (family == Family::A) {
      out.push_back(canonical_face(family, n, abs_v));
      continue;
    }
    int nonzero[kMaxRank], nz = 0;
    for (int i = 0; i < n; ++i)
      if (abs_v[i]) nonzero[nz++] = i;
    for (int signs = 0; signs < (1 << nz); ++signs) {
      for (int i = 0; i < n; ++i) v[i] = abs_v[i];
      for (int t = 0; t < nz; ++t)
        if (signs >> t & 1) v[nonzero[t]] = -v[nonzero[t]];
      Face f = canonical_face(Family::B, n, v);
      if (family == Family::D) {
        int lv[kMaxRank];
        for (int i = 0; i < n; ++i) lv[i] = f.level(i);
        Face g = canonical_face(Family::D, n, lv);
        // keep only faces already in D canonical form
        bool same = true;
        for (int i = 0; i < n; ++i) same = same && g.level(i) == f.level(i);
        if (same) out.push_back(g);
      } else {
        out.push_back(f);
      }
    }
  }
  return out;
}

}  // namespace

std::uint64_t face_code_limit(Family family, int n) {
  std::uint64_t r = static_cast<std::uint64_t>(radix(family, n)), total = 1;
  for (int i = 0; i < n; ++i) total *= r;
  return total;
}

std::uint64_t face_code(const Face& f) {
  const int n = f.n();
  const std::uint64_t r = static_cast<std::uint64_t>(radix(f.family(), n));
  const int shift = f.family() == Family::A ? 0 : n;
  std::uint64_t code = 0;
  for (int i = n - 1; i >= 0; --i) code = code * r + static_cast<std::uint64_t>(f.level(i) + shift);
  return code;
}

FaceCatalog::FaceCatalog(Family family, int n) : family_(family), n_(n) {
  faces_ = generate(family, n);
  std::vector<std::pair<std::string, Face>> keyed;
  keyed.reserve(faces_.size());
  for (const auto& f : faces_) keyed.emplace_back(f.to_string(), f);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < keyed.size(); ++i) faces_[i] = keyed[i].second;

  const std::size_t type_slots = std::size_t{1} << label_count(family, n);
  by_type_.assign(type_slots, {});
  const auto full = FaceType::full(family, n);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto t = faces_[i].type();
    by_type_[t.bits()].push_back(i);
    if (t == full) chambers_.push_back(faces_[i]);
  }
  containing_.assign(type_slots, 0);
  for (std::uint32_t b = 0; b < type_slots; ++b) {
    if (by_type_[b].empty()) continue;
    types_.emplace_back(family, n, b);
    // every chamber has exactly one face of each type
    containing_[b] = chambers_.size() / by_type_[b].size();
  }

  const auto limit = face_code_limit(family, n);
  if (limit <= kDenseLimit) {
    dense_.assign(limit, 0);
    chamber_dense_.assign(limit, 0);
    for (std::size_t i = 0; i < faces_.size(); ++i)
      dense_[face_code(faces_[i])] = static_cast<std::uint32_t>(i + 1);
    for (std::size_t i = 0; i < chambers_.size(); ++i)
      chamber_dense_[face_code(chambers_[i])] = static_cast<std::uint32_t>(i + 1);
  }
}

const FaceCatalog& FaceCatalog::get(Family family, int n) {
  check_catalog_rank(family, n);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FaceCatalog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(family), n}];
  if (!slot) slot.reset(new FaceCatalog(family, n));
  return *slot;
}

const std::vector<std::size_t>& FaceCatalog::faces_of_type(FaceType t) const {
  if (t.family() != family_ || t.n() != n_) throw std::invalid_argument("type from another complex");
  return by_type_[t.bits()];
}

std::size_t FaceCatalog::chambers_containing(FaceType t) const {
  if (t.family() != family_ || t.n() != n_) throw std::invalid_argument("type from another complex");
  return containing_[t.bits()];
}

namespace {

template <class Vec>
std::optional<std::size_t> lookup(const std::vector<std::uint32_t>& dense, const Vec& list,
                                  const Face& f) {
  if (!dense.empty()) {
    auto v = dense[face_code(f)];
    if (v == 0) return std::nullopt;
    return v - 1;
  }
  // A_8 and friends: binary search by text.
  auto text = f.to_string();
  auto it = std::lower_bound(list.begin(), list.end(), text,
                             [](const Face& g, const std::string& s) { return g.to_string() < s; });
  if (it == list.end() || !(*it == f)) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

std::optional<std::size_t> FaceCatalog::index_of(const Face& f) const {
  if (f.family() != family_ || f.n() != n_) return std::nullopt;
  return lookup(dense_, faces_, f);
}

std::size_t FaceCatalog::chamber_index(const Face& c) const {
  std::optional<std::size_t> i;
  if (c.family() == family_ && c.n() == n_) i = lookup(chamber_dense_, chambers_, c);
  if (!i) throw std::invalid_argument("not a chamber of this complex: " + c.to_string());
  return *i;
}

std::optional<Face> FaceCatalog::from_signs(const std::vector<std::int8_t>& signs) const {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<std::vector<std::int8_t>, std::size_t>> index;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = index[{static_cast<int>(family_), n_}];
  if (table.empty())
    for (std::size_t i = 0; i < faces_.size(); ++i) table.emplace(SignVector::of(faces_[i]).signs(), i);
  auto it = table.find(signs);
  if (it == table.end()) return std::nullopt;
  return faces_[it->second];
}

}  // namespace coxshuffle

namespace coxshuffle {

std::vector<Face> enumerate_faces(Family family, int n, std::optional<FaceType> type_filter) {
  const auto& cat = FaceCatalog::get(family, n);
  if (!type_filter) return cat.faces();
  std::vector<Face> out;
  for (auto i : cat.faces_of_type(*type_filter)) out.push_back(cat.faces()[i]);
  return out;
}

}  // namespace coxshuffle
