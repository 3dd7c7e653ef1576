#include "pidx/core.hpp"

#include "pidx/rng.hpp"

namespace pidx {

std::ostream& operator<<(std::ostream& os, SubsetMask s) {
  os << '{';
  bool first = true;
  for (Element e : s) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

GroundSet::GroundSet(int size) : size_(size) {
  if (size < 1 || size > 63) {
    throw InvalidSpecError("ground set size must be between 1 and 63, got " +
                           std::to_string(size));
  }
}

PredicateOracle::PredicateOracle(GroundSet ground,
                                 std::function<bool(SubsetMask)> fn)
    : ground_(ground),
      fn_(std::move(fn)),
      calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (!fn_) throw InvalidSpecError("predicate oracle requires a callable");
}

bool PredicateOracle::evaluate(SubsetMask s) const {
  if (!ground_.valid(s)) {
    throw InvalidSubsetError(
        "subset uses labels outside the ground set of size " +
        std::to_string(ground_.size()));
  }
  calls_->fetch_add(1, std::memory_order_relaxed);
  return fn_(s);
}

int cf(const PredicateOracle& p, SubsetMask s) { return p.evaluate(s) ? 1 : 0; }

int delta(const PredicateOracle& p, Element i, SubsetMask s) {
  if (!s.contains(i)) {
    throw PreconditionError("delta: element " + std::to_string(i) +
                            " is not a member of the queried set");
  }
  const int with = cf(p, s);
  if (with == 0) return 0;  // monotone: the subset cannot evaluate higher
  return with - cf(p, s.without(i));
}

bool is_critical_for_set(const PredicateOracle& p, Element i, SubsetMask s) {
  return delta(p, i, s) == 1;
}

bool is_critical_for_break(const PredicateOracle& p, Element i, SubsetMask b) {
  if (!b.contains(i)) {
    throw PreconditionError("break criticality: element " + std::to_string(i) +
                            " is not a member of the queried break");
  }
  const SubsetMask rest = p.ground().complement(b);
  return !p.evaluate(rest) && p.evaluate(rest.with(i));
}

std::optional<MonotonicityWitness> find_monotonicity_violation(
    const PredicateOracle& p, std::uint64_t trials, std::uint64_t rng_seed) {
  const SubsetMask none;
  const SubsetMask all = p.ground().full();
  if (p.evaluate(none)) {
    return MonotonicityWitness{none, none,
                               "the empty set satisfies the predicate"};
  }
  if (!p.evaluate(all)) {
    return MonotonicityWitness{
        all, all, "the full ground set does not satisfy the predicate"};
  }
  Rng rng(rng_seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const SubsetMask outer(rng.next() & all.value());
    const SubsetMask inner(rng.next() & outer.value());
    if (p.evaluate(inner) && !p.evaluate(outer)) {
      return MonotonicityWitness{
          inner, outer,
          "a subset satisfies the predicate but its superset does not"};
    }
  }
  return std::nullopt;
}

bool check_monotone_sample(const PredicateOracle& p, std::uint64_t trials,
                           std::uint64_t rng_seed) {
  return !find_monotonicity_violation(p, trials, rng_seed).has_value();
}

}  // namespace pidx
