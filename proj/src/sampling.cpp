#include "pidx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pidx/rng.hpp"

namespace pidx {

void SampleConfig::validate() const {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw PreconditionError("epsilon must lie strictly between 0 and 1");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw PreconditionError("delta must lie strictly between 0 and 1");
  }
  if (max_samples == 0) {
    throw PreconditionError("max_samples must be positive");
  }
}

std::uint64_t hoeffding_samples(int union_size, double epsilon, double delta) {
  const double bound =
      std::log(2.0 * union_size / delta) / (2.0 * epsilon * epsilon);
  return static_cast<std::uint64_t>(std::ceil(bound));
}

namespace {

double truncated_half_width(int union_size, double delta,
                            std::uint64_t samples) {
  return std::sqrt(std::log(2.0 * union_size / delta) /
                   (2.0 * static_cast<double>(samples)));
}

}  // namespace

SampleEstimate sample_shapley(const PredicateOracle& p,
                              const SampleConfig& config) {
  config.validate();
  const int m = p.ground().size();
  const std::uint64_t wanted =
      hoeffding_samples(m, config.epsilon, config.delta);
  const std::uint64_t samples = std::min(wanted, config.max_samples);

  std::vector<std::uint64_t> credits(static_cast<std::size_t>(m), 0);
  std::vector<Element> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  Rng rng(config.rng_seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    // In-place Fisher-Yates on the pinned generator.
    for (std::size_t k = order.size() - 1; k > 0; --k) {
      const std::size_t j = static_cast<std::size_t>(rng.bounded(k + 1));
      std::swap(order[k], order[j]);
    }
    // Credit the pivot: the element whose arrival first satisfies the prefix.
    // P(N) = 1 guarantees one exists, so each permutation credits exactly one
    // element and the estimates sum to exactly 1.
    SubsetMask prefix;
    for (Element e : order) {
      prefix = prefix.with(e);
      if (p.evaluate(prefix)) {
        credits[static_cast<std::size_t>(e) - 1] += 1;
        break;
      }
    }
  }

  SampleEstimate out;
  out.samples_used = samples;
  out.rng_seed = config.rng_seed;
  const double width = samples >= wanted
                           ? config.epsilon
                           : truncated_half_width(m, config.delta, samples);
  for (int e = 0; e < m; ++e) {
    out.estimate.push_back(static_cast<double>(credits[e]) /
                           static_cast<double>(samples));
    out.half_width.push_back(width);
  }
  return out;
}

SampleEstimate sample_banzhaf_raw(const PredicateOracle& p, Element e,
                                  const SampleConfig& config) {
  config.validate();
  const int m = p.ground().size();
  if (!p.ground().contains(e)) {
    throw PreconditionError("element " + std::to_string(e) +
                            " is outside the ground set");
  }
  const std::uint64_t wanted =
      hoeffding_samples(1, config.epsilon, config.delta);
  const std::uint64_t samples = std::min(wanted, config.max_samples);

  // Per-element substream: independent of other elements' runs under the
  // same user-facing seed, yet fully determined by (seed, e).
  Rng rng = Rng::substream(config.rng_seed, static_cast<std::uint64_t>(e));
  const std::uint64_t others = p.ground().full().without(e).value();
  std::uint64_t swings = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const SubsetMask part(rng.next() & others);
    // Monotonicity: if even part + {e} fails, part alone cannot succeed.
    if (p.evaluate(part.with(e)) && !p.evaluate(part)) ++swings;
  }

  SampleEstimate out;
  out.samples_used = samples;
  out.rng_seed = config.rng_seed;
  out.estimate.assign(static_cast<std::size_t>(m), 0.0);
  out.half_width.assign(static_cast<std::size_t>(m), 0.0);
  out.estimate[static_cast<std::size_t>(e) - 1] =
      static_cast<double>(swings) / static_cast<double>(samples);
  out.half_width[static_cast<std::size_t>(e) - 1] =
      samples >= wanted ? config.epsilon
                        : truncated_half_width(1, config.delta, samples);
  return out;
}

}  // namespace pidx
