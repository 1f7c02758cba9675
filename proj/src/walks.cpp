#include "coxshuffle/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "coxshuffle/spectral.hpp"

namespace coxshuffle {

std::uint64_t Rng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(mix(seed ^ mix((trial + 1) * kGamma))); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Lemire's multiply-shift with rejection
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

ElementSampler::ElementSampler(const AlgebraElement& x) {
  if (x.is_zero()) throw std::invalid_argument("cannot sample from the zero element");
  Integer lcm = 1;
  for (const auto& [f, c] : x.terms()) {
    if (c <= 0) throw std::invalid_argument("sampling needs positive coefficients");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer acc = 0;
  for (const auto& [f, c] : x.terms()) {
    Rational w = c * Rational(lcm);
    acc += w.get_num();
    if (!acc.fits_ulong_p() || acc > Integer(std::numeric_limits<std::uint64_t>::max() / 2))
      throw std::invalid_argument("weights too large to sample");
    faces_.push_back(f);
    cumulative_.push_back(acc.get_ui());
  }
}

const Face& ElementSampler::draw(Rng& rng) const {
  std::uint64_t r = rng.below(cumulative_.back());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  return faces_[static_cast<std::size_t>(it - cumulative_.begin())];
}

namespace {

int card_of(int c) { return std::abs(c); }

// marked cards (in a random order) on top, the rest in their old order
std::vector<int> marked_to_top(const std::vector<int>& deck, std::vector<int> marked, Rng& rng) {
  shuffle_in_place(marked, rng);
  std::vector<int> out = marked;
  for (int c : deck)
    if (std::find_if(marked.begin(), marked.end(), [&](int m) { return card_of(m) == card_of(c); }) == marked.end())
      out.push_back(c);
  return out;
}

std::vector<int> step_B(ShuffleFamily f, long a, const std::vector<int>& deck, Rng& rng) {
  const auto n = deck.size();
  if (f == ShuffleFamily::SideB || f == ShuffleFamily::SideD) {
    // pick a card, flip it or not; picked cards go on top in a random order
    std::vector<int> sign(n + 1, 0);
    std::vector<int> order;
    for (int c : deck) sign[static_cast<std::size_t>(card_of(c))] = c > 0 ? 1 : -1;
    std::vector<char> picked(n + 1, 0);
    for (long k = 0; k < a; ++k) {
      int card = static_cast<int>(rng.below(n)) + 1;
      if (rng.coin()) sign[static_cast<std::size_t>(card)] *= -1;
      if (!picked[static_cast<std::size_t>(card)]) {
        picked[static_cast<std::size_t>(card)] = 1;
        order.push_back(card);
      }
    }
    std::vector<int> marked;
    for (int card : order) marked.push_back(sign[static_cast<std::size_t>(card)] * card);
    return marked_to_top(deck, marked, rng);
  }
  // riffle: each card draws one of a outcomes. For a = 2b these are (label 1..b, flip or not);
  // odd a adds an outcome 0 that leaves the card in a block kept unchanged at the bottom.
  // Within a label block unflipped cards go on top in order, flipped ones below in reverse order.
  const bool odd = a % 2 == 1;
  const auto labels = static_cast<std::size_t>(a / 2);
  std::vector<std::vector<int>> kept(labels), flipped(labels);
  std::vector<int> bottom;
  for (int c : deck) {
    auto u = rng.below(static_cast<std::uint64_t>(a));
    if (odd && u-- == 0) {
      bottom.push_back(c);
      continue;
    }
    if (u % 2) flipped[u / 2].push_back(-c);
    else kept[u / 2].push_back(c);
  }
  std::vector<int> out;
  for (std::size_t lab = labels; lab-- > 0;) {
    out.insert(out.end(), kept[lab].begin(), kept[lab].end());
    out.insert(out.end(), flipped[lab].rbegin(), flipped[lab].rend());
  }
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

}  // namespace

std::vector<int> procedural_step(ShuffleFamily f, long a, std::vector<int> deck, Rng& rng) {
  if (!valid_shuffle_index(f, a)) throw std::invalid_argument("invalid shuffle index");
  const auto n = deck.size();
  switch (f) {
    case ShuffleFamily::SideA: {
      std::vector<char> seen(n + 1, 0);
      std::vector<int> marked;
      for (long k = 0; k < a; ++k) {
        int card = static_cast<int>(rng.below(n)) + 1;
        if (!seen[static_cast<std::size_t>(card)]) {
          seen[static_cast<std::size_t>(card)] = 1;
          marked.push_back(card);
        }
      }
      return marked_to_top(deck, marked, rng);
    }
    case ShuffleFamily::TwoSidedA: {
      // marks T (1) or B (2); a later mark overwrites
      std::vector<int> mark(n + 1, 0);
      for (long k = 0; k < a; ++k) {
        int card = static_cast<int>(rng.below(n)) + 1;
        mark[static_cast<std::size_t>(card)] = rng.coin() ? 1 : 2;
      }
      std::vector<int> top, middle, bottom;
      for (int c : deck) (mark[static_cast<std::size_t>(c)] == 1 ? top : mark[static_cast<std::size_t>(c)] == 2 ? bottom : middle).push_back(c);
      shuffle_in_place(top, rng);
      shuffle_in_place(bottom, rng);
      top.insert(top.end(), middle.begin(), middle.end());
      top.insert(top.end(), bottom.begin(), bottom.end());
      return top;
    }
    case ShuffleFamily::RiffleA: {
      // label each card 1..a; label a goes on top, order kept within labels
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(a));
      for (int c : deck) blocks[rng.below(static_cast<std::uint64_t>(a))].push_back(c);
      std::vector<int> out;
      for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
      return out;
    }
    case ShuffleFamily::SideB:
    case ShuffleFamily::RiffleB:
      return step_B(f, a, deck, rng);
    case ShuffleFamily::SideD:
    case ShuffleFamily::RiffleD: {
      // give the unsigned bottom card a sign, run the B walk, forget the new bottom sign
      deck.back() = card_of(deck.back());
      auto out = step_B(f, a, deck, rng);
      out.back() = card_of(out.back());
      return out;
    }
  }
  throw std::logic_error("bad family");
}

void validate(const WalkConfig& cfg) {
  check_family_rank(cfg.family, cfg.n);
  if (!valid_shuffle_index(cfg.family, cfg.a)) throw std::invalid_argument("invalid shuffle index");
  if (cfg.steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (cfg.trials == 0) throw std::invalid_argument("trials must be positive");
  const auto& cat = FaceCatalog::get(info(cfg.family).complex, cfg.n);
  if (cfg.start >= cat.chambers().size()) throw std::invalid_argument("start chamber out of range");
}

namespace {

struct Stepper {
  const FaceCatalog& cat;
  ShuffleFamily f;
  long a;
  SamplerRoute route;
  ElementSampler sampler;

  Stepper(const WalkConfig& cfg)
      : cat(FaceCatalog::get(info(cfg.family).complex, cfg.n)),
        f(cfg.family),
        a(cfg.a),
        route(cfg.route),
        sampler(shuffle(cfg.family, cfg.n, cfg.a)) {}

  std::size_t step(std::size_t c, Rng& rng) const {
    const Face& ch = cat.chambers()[c];
    if (route == SamplerRoute::Element) return cat.chamber_index(sampler.draw(rng) * ch);
    auto deck = procedural_step(f, a, ch.deck(), rng);
    return cat.chamber_index(Face::from_deck(cat.family(), deck));
  }
};

double tv_to_uniform(const std::vector<std::uint64_t>& counts, std::uint64_t trials) {
  const double u = 1.0 / static_cast<double>(counts.size());
  double s = 0;
  for (auto c : counts) s += std::fabs(static_cast<double>(c) / static_cast<double>(trials) - u);
  return s / 2;
}

}  // namespace

WalkTrace run_walk(const WalkConfig& cfg) {
  validate(cfg);
  Stepper st(cfg);
  const std::size_t N = st.cat.chambers().size();
  const auto steps = static_cast<std::size_t>(cfg.steps);
  std::vector<std::vector<std::uint64_t>> counts(steps + 1, std::vector<std::uint64_t>(N));
  WalkTrace t;
  t.trials = cfg.trials;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = Rng::for_trial(cfg.seed, trial);
    std::size_t c = cfg.start;
    ++counts[0][c];
    if (trial == 0) t.path.push_back(c);
    for (std::size_t s = 1; s <= steps; ++s) {
      c = st.step(c, rng);
      ++counts[s][c];
      if (trial == 0) t.path.push_back(c);
    }
  }
  for (const auto& row : counts) t.tv.push_back(tv_to_uniform(row, cfg.trials));
  t.final_counts = counts.back();
  return t;
}

std::string trace_csv(const WalkTrace& t) {
  std::string out = "step,chamber,tv_distance\n";
  char buf[96];
  for (std::size_t s = 0; s < t.tv.size(); ++s) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.6f\n", s, t.path[s], t.tv[s]);
    out += buf;
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> empirical_transition_counts(const WalkConfig& cfg) {
  validate(cfg);
  Stepper st(cfg);
  const std::size_t N = st.cat.chambers().size();
  std::vector<std::vector<std::uint64_t>> counts(N, std::vector<std::uint64_t>(N));
  for (std::size_t from = 0; from < N; ++from)
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      // one stream per (column, trial)
      Rng rng = Rng::for_trial(cfg.seed, from * cfg.trials + trial);
      ++counts[st.step(from, rng)][from];
    }
  return counts;
}

ToleranceReport compare_counts(const std::vector<std::vector<std::uint64_t>>& counts, const linalg::Matrix& exact,
                               std::uint64_t trials, double sds) {
  ToleranceReport r;
  const double T = static_cast<double>(trials);
  for (std::size_t i = 0; i < exact.size(); ++i)
    for (std::size_t j = 0; j < exact.size(); ++j) {
      ++r.entries;
      const double p = exact[i][j].get_d();
      const double obs = static_cast<double>(counts[i][j]) / T;
      if (exact[i][j] == 0) {
        r.zero_violations += counts[i][j] != 0;
        continue;
      }
      if (exact[i][j] == 1) {
        r.breaches += counts[i][j] != trials;
        continue;
      }
      // continuity-corrected binomial z score
      const double sd = std::sqrt(p * (1 - p) / T);
      const double z = std::max(0.0, std::fabs(obs - p) - 0.5 / T) / sd;
      r.worst = std::max(r.worst, z);
      r.breaches += z > sds;
    }
  r.ok = r.breaches == 0 && r.zero_violations == 0;
  return r;
}

}  // namespace coxshuffle
