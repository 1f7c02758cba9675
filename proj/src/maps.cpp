#include "coxshuffle/maps.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "coxshuffle/linalg.hpp"

namespace coxshuffle {

std::string_view to_string(ComplexMap m) {
  switch (m) {
    case ComplexMap::BtoD: return "B-D";
    case ComplexMap::DtoA: return "D-A";
    case ComplexMap::BtoA: return "B-A";
  }
  return "?";
}

ComplexMap parse_complex_map(std::string_view name) {
  for (auto m : {ComplexMap::BtoD, ComplexMap::DtoA, ComplexMap::BtoA})
    if (name == to_string(m)) return m;
  throw std::invalid_argument("unknown map: " + std::string(name) + " (expected B-D, D-A or B-A)");
}

Family source_family(ComplexMap m) { return m == ComplexMap::DtoA ? Family::D : Family::B; }
Family target_family(ComplexMap m) { return m == ComplexMap::BtoD ? Family::D : Family::A; }

namespace {

void expect(const Face& f, Family fam) {
  if (f.family() != fam) throw std::invalid_argument("face is not of type " + std::string(to_string(fam)));
}

}  // namespace

Face map_B_to_D(const Face& f) {
  expect(f, Family::B);
  auto lv = f.levels();
  return Face::from_levels(Family::D, f.n(), lv);
}

// Levels order the unbarred letters left to right, so forgetting signs keeps
// the relative order of levels.
Face map_B_to_A(const Face& f) {
  expect(f, Family::B);
  auto lv = f.levels();
  return Face::from_levels(Family::A, f.n(), lv);
}

Face map_D_to_A(const Face& f) {
  expect(f, Family::D);
  auto lv = f.levels();
  return Face::from_levels(Family::A, f.n(), lv);
}

Face apply_map(ComplexMap m, const Face& f) {
  switch (m) {
    case ComplexMap::BtoD: return map_B_to_D(f);
    case ComplexMap::DtoA: return map_D_to_A(f);
    case ComplexMap::BtoA: return map_B_to_A(f);
  }
  throw std::logic_error("bad map");
}

AlgebraElement push_element(ComplexMap m, const AlgebraElement& x) {
  if (x.family() != source_family(m)) throw std::invalid_argument("element is over the wrong complex");
  AlgebraElement out(target_family(m), x.n());
  for (const auto& [f, c] : x.terms()) out.add_term(apply_map(m, f), c);
  return out;
}

HomomorphismReport verify_homomorphism(ComplexMap m, int n, std::uint64_t samples, std::uint64_t seed) {
  HomomorphismReport rep{m, n};
  const auto& faces = FaceCatalog::get(source_family(m), n).faces();
  std::vector<Face> image;
  image.reserve(faces.size());
  for (const auto& f : faces) image.push_back(apply_map(m, f));
  auto test = [&](std::size_t i, std::size_t j) {
    ++rep.pairs;
    if (apply_map(m, faces[i] * faces[j]) != image[i] * image[j]) ++rep.failures;
  };
  if (samples == 0) {
    rep.exhaustive = true;
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t j = 0; j < faces.size(); ++j) test(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      auto i = pick(rng);
      test(i, pick(rng));
    }
  }
  return rep;
}

namespace {

Check make(std::string name, std::string statement, bool ok, std::string detail = {}) {
  return {std::move(name), std::move(statement), ok, std::move(detail)};
}

}  // namespace

std::vector<Check> side_chain_checks(int n, long max_a) {
  std::vector<Check> out;
  bool sig = true;
  std::string bad;
  for (int j = 0; j <= n; ++j) {
    auto d = push_element(ComplexMap::BtoD, sigma(ShuffleFamily::SideB, n, j));
    auto a = push_element(ComplexMap::DtoA, d);
    if (d != sigma(ShuffleFamily::SideD, n, j) || a != sigma(ShuffleFamily::TwoSidedA, n, j)) {
      sig = false;
      bad += " j=" + std::to_string(j);
    }
  }
  out.push_back(make("side-chain-sigma", "sideB sigma_j -> sideD sigma_j -> twoSidedA sigma_j, 0 <= j <= n", sig, bad));
  auto top = push_element(ComplexMap::BtoD, sigma(ShuffleFamily::SideB, n, n));
  out.push_back(make("side-chain-top", "sideB sigma_n -> 2 sigma_{n-1} in D",
                     top == Rational(2) * sigma(ShuffleFamily::SideD, n, n - 1)));
  bool sh = true;
  bad.clear();
  for (long a = 0; a <= max_a; ++a) {
    auto d = push_element(ComplexMap::BtoD, shuffle(ShuffleFamily::SideB, n, a));
    auto x = push_element(ComplexMap::DtoA, d);
    if (d != shuffle(ShuffleFamily::SideD, n, a) || x != shuffle(ShuffleFamily::TwoSidedA, n, a)) {
      sh = false;
      bad += " a=" + std::to_string(a);
    }
  }
  out.push_back(make("side-chain-shuffle", "sideB S_a -> sideD S_a -> twoSidedA S_a, a <= " + std::to_string(max_a), sh, bad));
  return out;
}

std::vector<Check> riffle_double_checks(int n) {
  std::vector<Check> out;
  std::vector<AlgebraElement> basis{AlgebraElement::identity(Family::B, n)};
  for (int j = 1; j < n; ++j) {
    basis.push_back(sigma(ShuffleFamily::RiffleB, n, j));
    basis.push_back(sigma(ShuffleFamily::RiffleB, n, j, true));
  }
  basis.push_back(sigma(ShuffleFamily::RiffleB, n, n));

  bool match = true;
  std::string bad;
  std::vector<linalg::Vector> src, img;
  for (int j = 0; j <= n; ++j)
    for (bool primed : {false, true}) {
      auto pushed = push_element(ComplexMap::BtoD, sigma(ShuffleFamily::RiffleB, n, j, primed));
      if (pushed != sigma(ShuffleFamily::RiffleD, n, j, primed)) {
        match = false;
        bad += std::string(" sigma") + (primed ? "'" : "") + "_" + std::to_string(j);
      }
    }
  for (const auto& b : basis) {
    src.push_back(*invariant_coordinates(b));
    img.push_back(*invariant_coordinates(push_element(ComplexMap::BtoD, b)));
  }
  out.push_back(make("riffle-double-basis", "riffleB sigma_j, sigma'_j -> riffleD sigma_j, sigma'_j", match, bad));
  auto rs = linalg::rank(src), ri = linalg::rank(img);
  std::ostringstream d;
  d << "rank " << rs << " -> " << ri << " over " << basis.size() << " basis elements";
  out.push_back(make("riffle-double-isomorphism", "B -> D is injective on the riffleB double algebra",
                     rs == basis.size() && ri == rs, d.str()));
  return out;
}

std::vector<Check> riffle_to_A_checks(int n, long max_a) {
  std::vector<Check> out;
  bool sh = true;
  std::string bad;
  for (long a = 1; a <= max_a; ++a)
    if (push_element(ComplexMap::BtoA, shuffle(ShuffleFamily::RiffleB, n, a)) != shuffle(ShuffleFamily::RiffleA, n, a)) {
      sh = false;
      bad += " a=" + std::to_string(a);
    }
  out.push_back(make("riffle-weak-partitions", "riffleB S_a -> riffleA S_a, a <= " + std::to_string(max_a), sh, bad));
  AlgebraElement rhs = Rational(2) * AlgebraElement::identity(Family::A, n);
  for (int i = 1; i < n; ++i) rhs += sigma_J(FaceType(Family::A, n, 1u << (i - 1)));
  auto t = sigma_J(FaceType::parse(Family::B, n, "{t}"));
  out.push_back(make("riffle-sigma-t", "riffleB sigma_t -> sigma_{s_1} + ... + sigma_{s_{n-1}} + 2",
                     push_element(ComplexMap::BtoA, t) == rhs));
  return out;
}

}  // namespace coxshuffle
