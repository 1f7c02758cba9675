#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/linalg.hpp"

namespace coxshuffle {

// Counter-based SplitMix64. Draw i (i = 1, 2, ...) of a stream is
// mix(key + i*γ), γ = 0x9E3779B97F4A7C15. Trial t of a run seeded with s
// uses key = mix(s ^ mix((t + 1) * γ)), so trials are independent of the
// order in which they run.
class Rng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit Rng(std::uint64_t key) : key_(key) {}
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next() { return mix(key_ + ++counter_ * kGamma); }
  // Uniform on [0, bound), bound > 0; rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return next() >> 63; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Fisher-Yates with Rng::below, so results do not depend on the standard library.
template <class T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// Draws a face with probability coefficient / coefficient_sum.
class ElementSampler {
 public:
  // Throws std::invalid_argument unless every coefficient is positive.
  explicit ElementSampler(const AlgebraElement& x);
  const Face& draw(Rng& rng) const;
  std::uint64_t total() const { return cumulative_.back(); }

 private:
  std::vector<Face> faces_;
  std::vector<std::uint64_t> cumulative_;  // integer weights after clearing denominators
};

// One step of the card-level description of S_a on a deck (top first,
// signed for B and D; for D the bottom card's sign is ignored).
std::vector<int> procedural_step(ShuffleFamily f, long a, std::vector<int> deck, Rng& rng);

enum class SamplerRoute { Element, Procedural };

struct WalkConfig {
  ShuffleFamily family = ShuffleFamily::SideA;
  int n = 3;
  long a = 1;
  int steps = 10;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t start = 0;  // chamber index
  SamplerRoute route = SamplerRoute::Element;
};

void validate(const WalkConfig& cfg);

struct WalkTrace {
  std::vector<std::size_t> path;         // chamber of trial 0 at steps 0..steps
  std::vector<double> tv;                // distance to uniform at steps 0..steps
  std::vector<std::uint64_t> final_counts;
  std::uint64_t trials = 0;
};

WalkTrace run_walk(const WalkConfig& cfg);
// Columns step,chamber,tv_distance; chamber is trial 0's chamber index.
std::string trace_csv(const WalkTrace& t);

// counts[to][from]: cfg.trials one-step samples from every chamber.
std::vector<std::vector<std::uint64_t>> empirical_transition_counts(const WalkConfig& cfg);

struct ToleranceReport {
  bool ok = false;
  std::size_t entries = 0;
  std::size_t breaches = 0;         // |p_hat - p| > k sd
  std::size_t zero_violations = 0;  // p == 0 but observed
  double worst = 0;                 // largest |p_hat - p| / sd over entries with p in (0,1)
};

// Entrywise comparison of counts/trials against an exact column-stochastic matrix.
ToleranceReport compare_counts(const std::vector<std::vector<std::uint64_t>>& counts, const linalg::Matrix& exact,
                               std::uint64_t trials, double sds = 4.0);

}  // namespace coxshuffle
