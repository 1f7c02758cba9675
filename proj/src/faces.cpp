#include "coxshuffle/faces.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace coxshuffle {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "D") return Family::D;
  throw std::invalid_argument("unknown complex family: " + std::string(name));
}

void check_rank(Family f, int n) {
  int lo = f == Family::D ? 2 : 1;
  if (n < lo || n > kMaxRank)
    throw std::invalid_argument("rank n=" + std::to_string(n) + " outside [" + std::to_string(lo) +
                                "," + std::to_string(kMaxRank) + "] for family " +
                                std::string(to_string(f)));
}

int label_count(Family f, int n) { return f == Family::A ? n - 1 : n; }

std::string label_name(Family family, int n, int bit) {
  if (family == Family::B && bit == n - 1) return "t";
  if (family == Family::D && bit == n - 2) return "u";
  if (family == Family::D && bit == n - 1) return "v";
  return "s" + std::to_string(bit + 1);
}

// ---- FaceType -------------------------------------------------------------

FaceType::FaceType(Family family, int n, std::uint32_t bits)
    : family_(family), n_(static_cast<std::int8_t>(n)), bits_(bits) {
  check_rank(family, n);
  if (bits >> label_count(family, n)) throw std::invalid_argument("label outside label set");
}

FaceType FaceType::full(Family family, int n) {
  return {family, n, (1u << label_count(family, n)) - 1};
}

int FaceType::size() const { return __builtin_popcount(bits_); }

std::vector<std::string> FaceType::labels() const {
  std::vector<std::string> out;
  for (int b = 0; b < label_count(family_, n_); ++b)
    if (bits_ >> b & 1) out.push_back(label_name(family_, n_, b));
  return out;
}

bool FaceType::contains(std::string_view label) const {
  for (const auto& l : labels())
    if (l == label) return true;
  return false;
}

std::string FaceType::to_string() const {
  std::string s = "{";
  auto ls = labels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ',';
    s += ls[i];
  }
  return s + "}";
}

FaceType FaceType::from_labels(Family family, int n, const std::vector<std::string>& labels) {
  check_rank(family, n);
  std::uint32_t bits = 0;
  for (auto l : labels) {
    l.erase(std::remove(l.begin(), l.end(), '_'), l.end());
    int found = -1;
    for (int b = 0; b < label_count(family, n); ++b)
      if (label_name(family, n, b) == l) found = b;
    if (found < 0) throw std::invalid_argument("invalid label '" + l + "'");
    bits |= 1u << found;
  }
  return {family, n, bits};
}

FaceType FaceType::parse(Family family, int n, std::string_view text) {
  std::vector<std::string> labels;
  std::string cur;
  for (char c : text) {
    if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (!cur.empty()) labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) labels.push_back(cur);
  return from_labels(family, n, labels);
}

// ---- canonical form -------------------------------------------------------

namespace {

// Sorted distinct values of v[0..n).
int distinct_sorted(const int* v, int n, int* out) {
  int m = 0;
  for (int i = 0; i < n; ++i) {
    int x = v[i];
    int j = m;
    bool dup = false;
    for (int t = 0; t < m; ++t)
      if (out[t] == x) { dup = true; break; }
    if (dup) continue;
    while (j > 0 && out[j - 1] > x) {
      out[j] = out[j - 1];
      --j;
    }
    out[j] = x;
    ++m;
  }
  return m;
}

int index_in(const int* sorted, int m, int x) {
  for (int t = 0; t < m; ++t)
    if (sorted[t] == x) return t;
  return -1;
}

}  // namespace

Face canonical_face(Family family, int n, const int* values) {
  Face f;
  f.family_ = family;
  f.n_ = static_cast<std::int8_t>(n);
  int d[kMaxRank];
  if (family == Family::A) {
    int m = distinct_sorted(values, n, d);
    for (int i = 0; i < n; ++i) f.levels_[i] = static_cast<std::int8_t>(index_in(d, m, values[i]));
    return f;
  }
  int abs_v[kMaxRank];
  int nz = 0;
  for (int i = 0; i < n; ++i) {
    int a = std::abs(values[i]);
    if (a) abs_v[nz++] = a;
  }
  int m = distinct_sorted(abs_v, nz, d);
  int zeros = n - nz, ones = 0, one_at = -1;
  for (int i = 0; i < n; ++i) {
    int v = values[i];
    int l = v == 0 ? 0 : (index_in(d, m, std::abs(v)) + 1) * (v < 0 ? -1 : 1);
    f.levels_[i] = static_cast<std::int8_t>(l);
    if (l == 1 || l == -1) {
      ++ones;
      one_at = i;
    }
  }
  // D: a lone coordinate next to an empty central block merges into it.
  if (family == Family::D && zeros == 0 && ones == 1) {
    f.levels_[one_at] = 0;
    for (int i = 0; i < n; ++i) {
      if (i == one_at) continue;
      f.levels_[i] = static_cast<std::int8_t>(f.levels_[i] > 0 ? f.levels_[i] - 1 : f.levels_[i] + 1);
    }
  }
  return f;
}

Face Face::identity(Family family, int n) {
  check_rank(family, n);
  int zeros[kMaxRank] = {};
  return canonical_face(family, n, zeros);
}

Face Face::from_levels(Family family, int n, std::span<const int> levels) {
  check_rank(family, n);
  if (static_cast<int>(levels.size()) != n) throw std::invalid_argument("need one level per coordinate");
  return canonical_face(family, n, levels.data());
}

Face Face::from_deck(Family family, std::span<const int> deck) {
  int n = static_cast<int>(deck.size());
  check_rank(family, n);
  int v[kMaxRank];
  bool seen[kMaxRank] = {};
  for (int p = 0; p < n; ++p) {
    int c = deck[static_cast<std::size_t>(p)];
    int i = std::abs(c) - 1;
    if (i < 0 || i >= n || seen[i]) throw std::invalid_argument("deck is not a permutation");
    seen[i] = true;
    if (family == Family::A) {
      if (c < 0) throw std::invalid_argument("type A decks are unsigned");
      v[i] = p;
    } else {
      int mag = n - p;
      v[i] = c > 0 ? -mag : mag;
      if (family == Family::D && p == n - 1) v[i] = -mag;
    }
  }
  return canonical_face(family, n, v);
}

std::vector<int> Face::levels() const {
  return {levels_.begin(), levels_.begin() + n_};
}

int Face::zero_count() const {
  if (family_ == Family::A) return 0;
  int z = 0;
  for (int i = 0; i < n_; ++i) z += levels_[i] == 0;
  return z;
}

int Face::block_count() const {
  int k = 0;
  for (int i = 0; i < n_; ++i) {
    int l = family_ == Family::A ? levels_[i] + 1 : std::abs(levels_[i]);
    k = std::max(k, l);
  }
  return k;
}

std::vector<std::vector<int>> Face::blocks() const {
  int k = block_count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int i = 0; i < n_; ++i) {
    int l = levels_[i];
    if (family_ == Family::A) {
      out[static_cast<std::size_t>(l)].push_back(i + 1);
    } else if (l != 0) {
      int m = k - std::abs(l);  // 0-based block index from the left
      out[static_cast<std::size_t>(m)].push_back(l < 0 ? i + 1 : -(i + 1));
    }
  }
  return out;
}

std::vector<int> Face::zero_block() const {
  std::vector<int> z;
  if (family_ == Family::A) return z;
  for (int i = 0; i < n_; ++i)
    if (levels_[i] == 0) z.push_back(i + 1);
  return z;
}

FaceType Face::type() const { return face_type(*this); }

bool Face::is_chamber() const { return type() == FaceType::full(family_, n_); }

bool Face::is_identity() const { return *this == identity(family_, n_); }

std::vector<int> Face::deck() const {
  if (!is_chamber()) throw std::invalid_argument("face is not a chamber: " + to_string());
  std::vector<int> deck(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int l = levels_[i];
    if (family_ == Family::A) {
      deck[static_cast<std::size_t>(l)] = i + 1;
    } else if (l == 0) {
      deck[static_cast<std::size_t>(n_ - 1)] = i + 1;  // D: unsigned bottom card
    } else {
      int top_offset = family_ == Family::D ? n_ - 1 : n_;
      deck[static_cast<std::size_t>(top_offset - std::abs(l))] = l < 0 ? i + 1 : -(i + 1);
    }
  }
  return deck;
}

std::string Face::to_string() const {
  auto write_block = [](std::string& s, const std::vector<int>& b) {
    s += '{';
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(b[t]);
    }
    s += '}';
  };
  std::string s = "(";
  bool first = true;
  for (auto b : blocks()) {
    std::sort(b.begin(), b.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });
    if (!first) s += '|';
    first = false;
    write_block(s, b);
  }
  auto z = zero_block();
  if (!z.empty()) {
    if (!first) s += '|';
    if (family_ == Family::B) {
      s += "Z:";
      write_block(s, z);
    } else {
      std::vector<int> pairs;
      for (int x : z) {
        pairs.push_back(x);
        pairs.push_back(-x);
      }
      s += "C:";
      write_block(s, pairs);
    }
  }
  return s + ")";
}

std::uint64_t Face::key() const {
  std::uint64_t k = static_cast<std::uint64_t>(family_) << 44 | static_cast<std::uint64_t>(n_) << 40;
  for (int i = 0; i < kMaxRank; ++i)
    k |= static_cast<std::uint64_t>(levels_[i] + 16) << (35 - 5 * i);
  return k;
}

Face Face::parse(Family family, int n, std::string_view text) {
  check_rank(family, n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("cannot parse face '" + std::string(text) + "': " + why);
  };
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail("expected parentheses");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  if (!s.empty()) {
    std::size_t start = 0;
    while (true) {
      auto bar = s.find('|', start);
      parts.push_back(s.substr(start, bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
  }
  auto parse_block = [&](std::string p) {
    if (p.size() < 2 || p.front() != '{' || p.back() != '}') throw fail("bad block '" + p + "'");
    p = p.substr(1, p.size() - 2);
    std::vector<int> out;
    std::size_t start = 0;
    while (start < p.size()) {
      auto comma = p.find(',', start);
      std::string tok = p.substr(start, comma - start);
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw fail("bad letter '" + tok + "'");
      }
      if (used != tok.size() || x == 0 || std::abs(x) > n) throw fail("bad letter '" + tok + "'");
      out.push_back(x);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (out.empty()) throw fail("empty block");
    return out;
  };
  std::vector<std::vector<int>> signed_blocks;
  std::vector<int> zero;
  bool have_zero = false;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    if (part.rfind("Z:", 0) == 0 || part.rfind("C:", 0) == 0) {
      if (family == Family::A || p + 1 != parts.size()) throw fail("misplaced zero block");
      zero = parse_block(part.substr(2));
      have_zero = true;
    } else {
      signed_blocks.push_back(parse_block(part));
    }
  }
  int v[kMaxRank];
  bool seen[kMaxRank] = {};
  auto mark = [&](int letter, int value) {
    int i = std::abs(letter) - 1;
    if (seen[i]) throw fail("letter " + std::to_string(std::abs(letter)) + " repeated");
    seen[i] = true;
    v[i] = value;
  };
  int k = static_cast<int>(signed_blocks.size());
  for (int m = 0; m < k; ++m) {
    for (int x : signed_blocks[static_cast<std::size_t>(m)]) {
      if (family == Family::A) {
        if (x < 0) throw fail("negative letter in type A");
        mark(x, m);
      } else {
        mark(x, x > 0 ? -(k - m) : (k - m));
      }
    }
  }
  if (have_zero) {
    // Zero and central blocks are self-negative; accept i, -i or both.
    std::vector<int> pos;
    for (int x : zero) pos.push_back(std::abs(x));
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    for (int x : pos) mark(x, 0);
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw fail("letter " + std::to_string(i + 1) + " missing");
  return canonical_face(family, n, v);
}

// ---- product --------------------------------------------------------------

Face product(const Face& x, const Face& y) {
  if (x.family_ != y.family_ || x.n_ != y.n_)
    throw std::invalid_argument("face product: mismatched family or dimension");
  constexpr int M = 4 * kMaxRank + 3;
  int v[kMaxRank];
  for (int i = 0; i < x.n_; ++i) v[i] = x.levels_[i] * M + y.levels_[i];
  return canonical_face(x.family_, x.n_, v);
}

Face product_A(const Face& x, const Face& y) {
  if (x.family() != Family::A || y.family() != Family::A) throw std::invalid_argument("expected type A faces");
  return product(x, y);
}

Face product_B(const Face& x, const Face& y) {
  if (x.family() != Family::B || y.family() != Family::B) throw std::invalid_argument("expected type B faces");
  return product(x, y);
}

Face product_D(const Face& x, const Face& y) {
  if (x.family() != Family::D || y.family() != Family::D) throw std::invalid_argument("expected type D faces");
  return product(x, y);
}

bool is_face_of(const Face& x, const Face& y) { return product(x, y) == y; }

FaceType face_type(const Face& f) {
  const int n = f.n();
  const int k = f.block_count();
  int count[2 * kMaxRank + 2] = {};
  for (int i = 0; i < n; ++i) {
    int l = f.family() == Family::A ? f.level(i) : std::abs(f.level(i));
    ++count[l];
  }
  std::uint32_t bits = 0;
  int cumul = 0;
  switch (f.family()) {
    case Family::A:
      for (int l = 0; l + 1 < k; ++l) {
        cumul += count[l];
        bits |= 1u << (cumul - 1);
      }
      break;
    case Family::B:
      for (int d = k; d >= 1; --d) {
        cumul += count[d];
        bits |= 1u << (cumul - 1);
      }
      break;
    case Family::D: {
      for (int d = k; d >= 1; --d) {
        cumul += count[d];
        if (cumul <= n - 2) bits |= 1u << (cumul - 1);
      }
      if (count[0] == 1) {
        bits |= 3u << (n - 2);
      } else if (count[0] == 0) {
        int barred = 0;
        for (int i = 0; i < n; ++i) barred += f.level(i) > 0;
        bits |= 1u << (n - 2 + barred % 2);  // all unbarred: u
      }
      break;
    }
  }
  return {f.family(), n, bits};
}

// ---- sign vectors ---------------------------------------------------------

namespace {

std::int8_t sgn(int x) { return static_cast<std::int8_t>((x > 0) - (x < 0)); }

}  // namespace

std::size_t SignVector::hyperplane_count(Family family, int n) {
  std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  switch (family) {
    case Family::A: return pairs;
    case Family::D: return 2 * pairs;
    case Family::B: return 2 * pairs + static_cast<std::size_t>(n);
  }
  return 0;
}

SignVector::SignVector(Family family, int n, std::vector<std::int8_t> signs, Unchecked)
    : family_(family), n_(n), signs_(std::move(signs)) {}

SignVector::SignVector(Family family, int n, std::vector<std::int8_t> signs)
    : family_(family), n_(n), signs_(std::move(signs)) {
  check_rank(family, n);
  if (signs_.size() != hyperplane_count(family, n)) throw std::invalid_argument("wrong sign vector length");
  if (!FaceCatalog::get(family, n).from_signs(signs_))
    throw std::invalid_argument("sign vector is not realized by a face");
}

SignVector SignVector::of(const Face& f) {
  const int n = f.n();
  std::vector<std::int8_t> s;
  s.reserve(hyperplane_count(f.family(), n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(sgn(f.level(i) - f.level(j)));
  if (f.family() != Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back(sgn(f.level(i) + f.level(j)));
  }
  if (f.family() == Family::B)
    for (int i = 0; i < n; ++i) s.push_back(sgn(f.level(i)));
  return SignVector(f.family(), n, std::move(s), Unchecked{});
}

Face SignVector::face() const { return *FaceCatalog::get(family_, n_).from_signs(signs_); }

std::string SignVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) s += ',';
    s += signs_[i] > 0 ? '+' : signs_[i] < 0 ? '-' : '0';
  }
  return s + ")";
}

SignVector sign_vector_product(const SignVector& x, const SignVector& y) {
  if (x.family_ != y.family_ || x.n_ != y.n_) throw std::invalid_argument("sign vectors over different arrangements");
  std::vector<std::int8_t> s(x.signs_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = x.signs_[i] ? x.signs_[i] : y.signs_[i];
  return SignVector(x.family_, x.n_, std::move(s), SignVector::Unchecked{});
}

std::vector<std::int8_t> project_signs(Family from, Family to, int n,
                                       const std::vector<std::int8_t>& signs) {
  if (signs.size() != SignVector::hyperplane_count(from, n)) throw std::invalid_argument("wrong sign vector length");
  if (to == from) return signs;
  if (from == Family::A || (from == Family::D && to == Family::B))
    throw std::invalid_argument("can only delete hyperplanes");
  auto keep = SignVector::hyperplane_count(to, n);
  return {signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(keep)};
}

}  // namespace coxshuffle
