#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <vector>

#include "pidx/core.hpp"
#include "pidx/instances.hpp"
#include "pidx/rng.hpp"
#include "test_helpers.hpp"

using namespace pidx;
using pidx::testing::mask;

TEST_CASE("subset masks index elements from label 1") {
  const SubsetMask s = mask({1, 3, 4});
  CHECK(s.value() == 0b1101);
  CHECK(s.cardinality() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.labels() == std::vector<Element>{1, 3, 4});
}

TEST_CASE("subset mask algebra") {
  const SubsetMask a = mask({1, 2});
  const SubsetMask b = mask({2, 3});
  CHECK((a | b) == mask({1, 2, 3}));
  CHECK((a & b) == mask({2}));
  CHECK((a - b) == mask({1}));
  CHECK(a.with(3) == mask({1, 2, 3}));
  CHECK(a.without(2) == mask({1}));
  CHECK(a.with(1) == a);
  CHECK(mask({1}).subset_of(a));
  CHECK(a.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(SubsetMask().empty());
}

TEST_CASE("subset mask iteration ascends and printing is canonical") {
  std::vector<Element> seen;
  for (Element e : mask({5, 1, 9})) seen.push_back(e);
  CHECK(seen == std::vector<Element>{1, 5, 9});

  std::ostringstream text;
  text << mask({3, 1}) << " " << SubsetMask();
  CHECK(text.str() == "{1,3} {}");
}

TEST_CASE("ground set bounds and complement") {
  CHECK_THROWS_AS(GroundSet(0), InvalidSpecError);
  CHECK_THROWS_AS(GroundSet(64), InvalidSpecError);
  const GroundSet g(4);
  CHECK(g.size() == 4);
  CHECK(g.full() == mask({1, 2, 3, 4}));
  CHECK(g.contains(4));
  CHECK_FALSE(g.contains(5));
  CHECK(g.valid(mask({2, 4})));
  CHECK_FALSE(g.valid(SubsetMask(0b10000)));
  CHECK(g.complement(mask({1, 3})) == mask({2, 4}));
  CHECK(g.complement(SubsetMask()) == g.full());
}

TEST_CASE("oracle counts every evaluation, shared across copies") {
  const PredicateOracle p = pidx::testing::example_quota_oracle();
  CHECK(p.calls() == 0);
  CHECK(p.evaluate(mask({1, 2})));
  CHECK_FALSE(p.evaluate(mask({2, 3, 4, 5, 6})));
  CHECK(p.calls() == 2);

  const PredicateOracle copy = p;  // copies share one tally
  CHECK(copy.evaluate(mask({1, 3, 4})));
  CHECK(p.calls() == 3);
  p.reset_calls();
  CHECK(copy.calls() == 0);
}

TEST_CASE("oracle rejects out-of-range subsets and null callables") {
  const PredicateOracle p = pidx::testing::example_graph_oracle();
  CHECK_THROWS_AS(p.evaluate(SubsetMask(1ULL << 10)), InvalidSubsetError);
  CHECK_THROWS_AS(PredicateOracle(GroundSet(3), nullptr), InvalidSpecError);
}

TEST_CASE("characteristic function is the predicate's indicator") {
  const PredicateOracle p = pidx::testing::example_quota_oracle();
  CHECK(cf(p, mask({1, 2})) == 1);
  CHECK(cf(p, mask({2, 3})) == 0);
}

TEST_CASE("marginal contribution requires membership") {
  const PredicateOracle p = pidx::testing::example_quota_oracle();
  CHECK(delta(p, 1, mask({1, 2})) == 1);   // {1,2} wins, {2} loses
  CHECK(delta(p, 2, mask({1, 2})) == 1);   // {1} loses too
  CHECK(delta(p, 6, mask({1, 2, 6})) == 0);  // {1,2} already wins
  CHECK_THROWS_AS(delta(p, 3, mask({1, 2})), PreconditionError);
}

TEST_CASE("criticality for sets and breaks, pinned cases") {
  const PredicateOracle gp = pidx::testing::example_graph_oracle();
  CHECK(is_critical_for_set(gp, 3, mask({3})));
  CHECK(is_critical_for_set(gp, 3, mask({1, 3})));
  CHECK_FALSE(is_critical_for_set(gp, 1, mask({1, 3})));
  CHECK_FALSE(is_critical_for_set(gp, 1, mask({1, 2})));  // not satisfying

  // Break criticality: {3,4} is a break of the graph example and both
  // elements matter; {3} alone is not a break.
  CHECK(is_critical_for_break(gp, 3, mask({3, 4})));
  CHECK(is_critical_for_break(gp, 4, mask({3, 4})));
  const PredicateOracle qp = pidx::testing::example_quota_oracle();
  CHECK(is_critical_for_break(qp, 1, mask({1})));
  CHECK_FALSE(is_critical_for_break(qp, 2, mask({2})));
  CHECK_THROWS_AS(is_critical_for_break(qp, 2, mask({1})), PreconditionError);
}

TEST_CASE("monotonicity spot-check passes on monotone predicates") {
  const PredicateOracle p = pidx::testing::example_graph_oracle();
  CHECK_FALSE(find_monotonicity_violation(p, 500, 7).has_value());
  CHECK(check_monotone_sample(p, 500, 7));
}

TEST_CASE("monotonicity spot-check finds planted violations") {
  // Parity of |S| is maximally non-monotone: P(N) = 0 is caught immediately.
  const GroundSet g(6);
  const PredicateOracle parity(
      g, [](SubsetMask s) { return s.cardinality() % 2 == 1; });
  const auto witness = find_monotonicity_violation(parity, 200, 1);
  REQUIRE(witness.has_value());
  CHECK(witness->inner.subset_of(witness->outer));

  // A single inverted pair: P says no on {1,2} but yes on {1}.
  const PredicateOracle dip(g, [](SubsetMask s) {
    if (s == SubsetMask::of({1, 2})) return false;
    return s.contains(1);
  });
  const auto dip_witness = find_monotonicity_violation(dip, 2000, 3);
  REQUIRE(dip_witness.has_value());
  CHECK(dip_witness->inner.subset_of(dip_witness->outer));
}

TEST_CASE("random generator reproduces its reference stream") {
  Rng rng(42);
  CHECK(rng.next() == 0x15780b2e0c2ec716ULL);
  CHECK(rng.next() == 0x6104d9866d113a7eULL);
  CHECK(rng.next() == 0xae17533239e499a1ULL);
  CHECK(rng.next() == 0xecb8ad4703b360a1ULL);
  CHECK(rng.next() == 0xfde6dc7fe2ec5e64ULL);
  CHECK(rng.next() == 0xc50da53101795238ULL);

  Rng zero(0);
  CHECK(zero.next() == 0x99ec5f36cb75f2b4ULL);
  CHECK(zero.next() == 0xbf6e1f784956452aULL);
  CHECK(zero.next() == 0x1a5f849d4933e6e0ULL);
}

TEST_CASE("substreams are the documented seed offsets") {
  Rng sub = Rng::substream(42, 1);
  CHECK(sub.next() == 0xbe15272cdf80b6c2ULL);
  CHECK(sub.next() == 0xaf6e2ee49ff5d0e3ULL);
  CHECK(sub.next() == 0xca56edd0338a318fULL);

  // substream(seed, 0) is the base stream itself.
  Rng base = Rng::substream(42, 0);
  CHECK(base.next() == 0x15780b2e0c2ec716ULL);
}

TEST_CASE("bounded draws match the rejection-sampling reference") {
  Rng rng(7);
  const std::vector<std::uint64_t> expected{4, 4, 8, 4, 4, 1, 6, 6};
  for (std::uint64_t want : expected) CHECK(rng.bounded(10) == want);
}

TEST_CASE("bounded draws stay in range and cover small supports") {
  Rng rng(11);
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 200; ++k) seen.insert(rng.bounded(3));
  CHECK(seen == std::set<std::uint64_t>{0, 1, 2});
  CHECK(rng.bounded(1) == 0);
}
