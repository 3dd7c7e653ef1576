#pragma once
// Monte-Carlo estimators for the two indices with a direct sampling
// interpretation: Shapley-Shubik via random permutations (the index is the
// probability that an element tips a uniformly random ordering) and raw
// Banzhaf via uniform random subsets of the other elements. Sample counts
// follow the Hoeffding bound for an additive (epsilon, delta) guarantee, and
// every draw comes from the pinned generator, so results are reproducible
// bit-for-bit from the seed.

#include <cstdint>
#include <vector>

#include "pidx/core.hpp"

namespace pidx {

struct SampleConfig {
  double epsilon = 0.05;  // additive error bound, in (0,1)
  double delta = 0.05;    // failure probability, in (0,1)
  std::uint64_t rng_seed = 0;
  std::uint64_t max_samples = 10'000'000;

  void validate() const;
};

struct SampleEstimate {
  std::vector<double> estimate;    // [e - 1]
  std::vector<double> half_width;  // per-element confidence half-width
  std::uint64_t samples_used = 0;
  std::uint64_t rng_seed = 0;
};

// ceil(ln(2 * union_size / delta) / (2 * epsilon^2)): enough samples that all
// union_size estimates are within epsilon with probability 1 - delta.
std::uint64_t hoeffding_samples(int union_size, double epsilon, double delta);

// Estimates all m Shapley values from one stream of random permutations; each
// permutation credits exactly the element whose arrival first satisfies the
// prefix, so the estimates sum to exactly 1. The per-element half-width is
// epsilon when the full Hoeffding count ran, or the bound implied by the
// truncated count when max_samples cut it short.
SampleEstimate sample_shapley(const PredicateOracle& p,
                              const SampleConfig& config);

// Estimates the raw Banzhaf value of one element by sampling uniform subsets
// of the remaining elements; the stream is the seed's substream for that
// element, so per-element runs are independent and individually reproducible.
// Only slot e - 1 of the result is meaningful.
SampleEstimate sample_banzhaf_raw(const PredicateOracle& p, Element e,
                                  const SampleConfig& config);

}  // namespace pidx
