#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "pidx/enumeration.hpp"
#include "pidx/extraction.hpp"
#include "test_helpers.hpp"

using namespace pidx;
using pidx::testing::mask;

namespace {
constexpr std::array<ExtractAlgo, 4> kAllAlgos{
    ExtractAlgo::deletion, ExtractAlgo::quickxplain, ExtractAlgo::progression,
    ExtractAlgo::dichotomic};
}

TEST_CASE("verification accepts exactly the minimal satisfying sets") {
  const PredicateOracle p = pidx::testing::example_graph_oracle();
  CHECK(verify_msp(p, mask({3})));
  CHECK(verify_msp(p, mask({1, 4})));
  CHECK(verify_msp(p, mask({2, 4})));
  CHECK_FALSE(verify_msp(p, mask({1, 3})));  // satisfying but not minimal
  CHECK_FALSE(verify_msp(p, mask({1, 2})));  // not satisfying
  CHECK_FALSE(verify_msp(p, SubsetMask()));
}

TEST_CASE("verification spends exactly one call per element plus one") {
  const PredicateOracle p = pidx::testing::example_graph_oracle();
  for (SubsetMask candidate :
       {mask({3}), mask({1, 3}), mask({1, 2}), mask({1, 2, 3, 4})}) {
    p.reset_calls();
    verify_msp(p, candidate);
    CHECK(p.calls() == 1 + static_cast<std::uint64_t>(candidate.cardinality()));
  }
  p.reset_calls();
  verify_mbp(p, mask({3, 4}));
  CHECK(p.calls() == 3);
}

TEST_CASE("break verification on pinned cases") {
  const PredicateOracle p = pidx::testing::example_graph_oracle();
  CHECK(verify_mbp(p, mask({3, 4})));
  CHECK(verify_mbp(p, mask({1, 2, 3})));
  CHECK_FALSE(verify_mbp(p, mask({3})));        // removal still dominated
  CHECK_FALSE(verify_mbp(p, mask({1, 3, 4})));  // break but not minimal
}

TEST_CASE("deletion from the full set, pinned results and call counts") {
  const PredicateOracle graph = pidx::testing::example_graph_oracle();
  const ExtractionResult a =
      extract_msp(graph, graph.ground().full(), ExtractAlgo::deletion);
  CHECK(a.found == mask({3}));
  CHECK(a.oracle_calls == 5);  // |seed| + 1, including the seed check
  CHECK(a.algorithm == ExtractAlgo::deletion);

  const PredicateOracle quota = pidx::testing::example_quota_oracle();
  const ExtractionResult b =
      extract_msp(quota, quota.ground().full(), ExtractAlgo::deletion);
  CHECK(b.found == mask({1, 3, 5}));
  CHECK(b.oracle_calls == 7);
}

TEST_CASE("deletion keeps an already-minimal seed at |seed|+1 calls") {
  const PredicateOracle quota = pidx::testing::example_quota_oracle();
  const ExtractionResult r =
      extract_msp(quota, mask({1, 3, 4}), ExtractAlgo::deletion);
  CHECK(r.found == mask({1, 3, 4}));
  CHECK(r.oracle_calls == 4);
}

TEST_CASE("extraction rejects non-satisfying seeds after one call") {
  const PredicateOracle p = pidx::testing::example_graph_oracle();
  for (ExtractAlgo algo : kAllAlgos) {
    p.reset_calls();
    CHECK_THROWS_AS(extract_msp(p, mask({1, 2}), algo), PreconditionError);
    CHECK(p.calls() == 1);
  }
}

TEST_CASE("every algorithm returns a verified minimal set on both examples") {
  for (const PredicateOracle& p : {pidx::testing::example_graph_oracle(),
                                   pidx::testing::example_quota_oracle()}) {
    const auto [msps, mbps] = enumerate_brute(p);
    for (ExtractAlgo algo : kAllAlgos) {
      const ExtractionResult r =
          extract_msp(p, p.ground().full(), algo);
      CHECK(msps.contains(r.found));
      CHECK(verify_msp(p, r.found));
      CHECK(r.algorithm == algo);
      CHECK(r.oracle_calls >= 1);

      const ExtractionResult br = extract_mbp(p, algo);
      CHECK(mbps.contains(br.found));
      CHECK(verify_mbp(p, br.found));
    }
  }
}

TEST_CASE("minimal-break extraction via the complement, pinned result") {
  const PredicateOracle quota = pidx::testing::example_quota_oracle();
  const ExtractionResult r = extract_mbp(quota, ExtractAlgo::deletion);
  CHECK(r.found == mask({2, 4, 5}));
  CHECK(r.oracle_calls == 7);  // deletion's |seed|+1 on the complement oracle
}

TEST_CASE("extraction is deterministic") {
  const PredicateOracle p = pidx::testing::example_quota_oracle();
  for (ExtractAlgo algo : kAllAlgos) {
    const ExtractionResult first = extract_msp(p, p.ground().full(), algo);
    const ExtractionResult second = extract_msp(p, p.ground().full(), algo);
    CHECK(first.found == second.found);
    CHECK(first.oracle_calls == second.oracle_calls);
  }
}

TEST_CASE("all algorithms land in the brute-force family on random instances") {
  Rng rng(2026);
  int instances = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 3 + static_cast<int>(rng.bounded(10));  // 3..12
    const Problem problem = pidx::testing::random_problem(rng, m, trial);
    const PredicateOracle p = problem.make_oracle();
    if (!p.evaluate(p.ground().full()) || p.evaluate(SubsetMask())) continue;
    ++instances;
    const auto [msps, mbps] = enumerate_brute(p);
    for (ExtractAlgo algo : kAllAlgos) {
      const ExtractionResult r = extract_msp(p, p.ground().full(), algo);
      CHECK(msps.contains(r.found));
      const ExtractionResult br = extract_mbp(p, algo);
      CHECK(mbps.contains(br.found));
    }
    // Deletion's call count is exact on arbitrary satisfying seeds too.
    const SubsetMask seed = p.ground().full();
    const ExtractionResult d = extract_msp(p, seed, ExtractAlgo::deletion);
    CHECK(d.oracle_calls == static_cast<std::uint64_t>(seed.cardinality()) + 1);
  }
  CHECK(instances >= 50);  // the generators almost never emit constant predicates
}

TEST_CASE("growing a non-satisfying seed to a maximal non-satisfying set") {
  const PredicateOracle quota = pidx::testing::example_quota_oracle();
  quota.reset_calls();
  CHECK(grow_to_coatom(quota, mask({2, 3, 4, 5, 6})) == mask({2, 3, 4, 5, 6}));
  CHECK(quota.calls() == 2);  // seed check + the single absent element

  const PredicateOracle graph = pidx::testing::example_graph_oracle();
  graph.reset_calls();
  CHECK(grow_to_coatom(graph, SubsetMask()) == mask({1, 2}));
  CHECK(graph.calls() == 5);  // seed check + one probe per element

  CHECK_THROWS_AS(grow_to_coatom(graph, mask({3})), PreconditionError);
}

TEST_CASE("grown sets are coatoms: every extension satisfies") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng.bounded(8));
    const Problem problem = pidx::testing::random_problem(rng, m, trial);
    const PredicateOracle p = problem.make_oracle();
    if (p.evaluate(SubsetMask())) continue;
    const SubsetMask grown = grow_to_coatom(p, SubsetMask());
    CHECK_FALSE(p.evaluate(grown));
    for (Element e = 1; e <= m; ++e) {
      if (!grown.contains(e)) CHECK(p.evaluate(grown.with(e)));
    }
  }
}
