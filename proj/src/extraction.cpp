#include "pidx/extraction.hpp"

#include <cstddef>
#include <vector>

#include "pidx/instances.hpp"

namespace pidx {

const char* to_string(ExtractAlgo algo) {
  switch (algo) {
    case ExtractAlgo::deletion: return "deletion";
    case ExtractAlgo::quickxplain: return "quickxplain";
    case ExtractAlgo::progression: return "progression";
    case ExtractAlgo::dichotomic: return "dichotomic";
  }
  return "unknown";
}

bool verify_msp(const PredicateOracle& p, SubsetMask candidate) {
  // Deliberately no short-circuit: the 1 + |candidate| call count is part of
  // the contract, independent of the verdict.
  bool ok = p.evaluate(candidate);
  for (Element i : candidate) {
    if (p.evaluate(candidate.without(i))) ok = false;
  }
  return ok;
}

bool verify_mbp(const PredicateOracle& p, SubsetMask candidate) {
  const SubsetMask rest = p.ground().complement(candidate);
  bool ok = !p.evaluate(rest);
  for (Element i : candidate) {
    if (!p.evaluate(rest.with(i))) ok = false;
  }
  return ok;
}

namespace {

SubsetMask run_deletion(const PredicateOracle& p, SubsetMask seed) {
  SubsetMask current = seed;
  for (Element i : seed) {  // ascending label order, one call per seed element
    const SubsetMask trial = current.without(i);
    if (p.evaluate(trial)) current = trial;
  }
  return current;
}

// Divide-and-conquer minimization. Invariant on entry: P(background + span)
// holds. Returns the minimal subset of `span` whose union with `background`
// satisfies the predicate. `background_changed` skips the redundant oracle
// call when the background is unchanged from the caller's context (where it
// is known non-satisfying).
SubsetMask run_quickxplain(const PredicateOracle& p, SubsetMask background,
                           const std::vector<Element>& span,
                           bool background_changed) {
  if (background_changed && p.evaluate(background)) return SubsetMask{};
  if (span.size() == 1) return SubsetMask::of({span.front()});
  // Odd spans lean the extra element to the lower-label half.
  const std::size_t half = (span.size() + 1) / 2;
  const std::vector<Element> lower(span.begin(),
                                   span.begin() + static_cast<long>(half));
  const std::vector<Element> upper(span.begin() + static_cast<long>(half),
                                   span.end());
  SubsetMask with_lower = background;
  for (Element e : lower) with_lower = with_lower.with(e);
  const SubsetMask need_upper =
      run_quickxplain(p, with_lower, upper, !lower.empty());
  const SubsetMask need_lower =
      run_quickxplain(p, background | need_upper, lower, !need_upper.empty());
  return need_lower | need_upper;
}

// Shared scheme of the progression and dichotomic algorithms. Both repeatedly
// locate the shortest prefix of the remaining elements whose union with the
// confirmed set satisfies the predicate; the last element of that prefix is
// necessary given the ones before it, so it is confirmed and everything after
// it is dropped. They differ only in how the prefix length is bracketed:
// progression probes geometrically (1, 2, 4, ...) before bisecting,
// dichotomic bisects the whole range directly.
SubsetMask run_transition(const PredicateOracle& p, SubsetMask seed,
                          bool geometric_probe) {
  SubsetMask confirmed;
  std::vector<Element> rest = seed.labels();
  auto with_prefix = [&](std::size_t k) {
    SubsetMask s = confirmed;
    for (std::size_t idx = 0; idx < k; ++idx) s = s.with(rest[idx]);
    return s;
  };
  // Loop invariant: P(confirmed + rest) = 1.
  while (!p.evaluate(confirmed)) {
    // Bracket the transition: P fails at prefix length lo, holds at hi.
    std::size_t lo = 0;
    std::size_t hi = rest.size();  // P(confirmed + rest) known satisfied
    if (geometric_probe) {
      std::size_t k = 1;
      while (k < rest.size()) {
        if (p.evaluate(with_prefix(k))) {
          hi = k;
          break;
        }
        lo = k;
        k *= 2;
      }
    }
    while (lo + 1 < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (p.evaluate(with_prefix(mid))) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    confirmed = confirmed.with(rest[hi - 1]);
    rest.resize(hi - 1);  // later elements are unnecessary
  }
  return confirmed;
}

}  // namespace

ExtractionResult extract_msp(const PredicateOracle& p, SubsetMask seed,
                             ExtractAlgo algo) {
  const std::uint64_t before = p.calls();
  if (!p.evaluate(seed)) {
    throw PreconditionError("extraction seed does not satisfy the predicate");
  }
  SubsetMask found;
  switch (algo) {
    case ExtractAlgo::deletion:
      found = run_deletion(p, seed);
      break;
    case ExtractAlgo::quickxplain:
      found = seed.empty() ? SubsetMask{}
                           : run_quickxplain(p, SubsetMask{}, seed.labels(),
                                             false);
      break;
    case ExtractAlgo::progression:
      found = run_transition(p, seed, /*geometric_probe=*/true);
      break;
    case ExtractAlgo::dichotomic:
      found = run_transition(p, seed, /*geometric_probe=*/false);
      break;
  }
  return ExtractionResult{found, p.calls() - before, algo};
}

ExtractionResult extract_mbp(const PredicateOracle& p, ExtractAlgo algo) {
  // A minimal break of P is a minimal satisfying set of the complement
  // predicate, and the full ground set always satisfies the complement
  // (because P of the empty set is 0 for any valid predicate).
  const PredicateOracle q = complement_predicate(p);
  return extract_msp(q, q.ground().full(), algo);
}

SubsetMask grow_to_coatom(const PredicateOracle& p, SubsetMask seed) {
  if (p.evaluate(seed)) {
    throw PreconditionError(
        "grow seed must not satisfy the predicate");
  }
  SubsetMask current = seed;
  for (Element e : p.ground().full() - seed) {
    const SubsetMask trial = current.with(e);
    if (!p.evaluate(trial)) current = trial;
  }
  // Every skipped element e saw P(current + e) = 1 at the time; monotonicity
  // keeps that true as current grows, so the result is maximal.
  return current;
}

}  // namespace pidx
