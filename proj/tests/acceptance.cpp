// Acceptance checks: nine end-to-end criteria covering table reproduction,
// family enumeration, duality, method equivalence, extraction soundness,
// normalization, and sampling convergence. Each prints one PASS/FAIL line;
// the process exits 0 only if all nine hold.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pidx/cli.hpp"
#include "pidx/enumeration.hpp"
#include "pidx/extraction.hpp"
#include "pidx/indices.hpp"
#include "pidx/report_io.hpp"
#include "pidx/sampling.hpp"
#include "test_helpers.hpp"

using namespace pidx;
using pidx::testing::mask;
using pidx::testing::rat;

namespace {

std::string data_file(const std::string& name) {
#ifdef PIDX_DATA_DIR
  return std::string(PIDX_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  if (code != 0) {
    throw Error("cli exited " + std::to_string(code) + ": " + err.str());
  }
  return out.str();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

Rational sum(const std::vector<Rational>& values) {
  return std::accumulate(values.begin(), values.end(), Rational(0));
}

struct Criterion {
  std::string title;
  double budget_seconds;  // 0 = no budget
  std::function<bool(std::string&)> body;
};

// 1. The dominating-set example's index table at three decimals, exact
// rationals checked before rounding.
bool criterion_table_graph(std::string& why) {
  const std::string table =
      cli({"indices", "--input", data_file("dominating4.json")});
  for (const std::string row : {"0.083  0.083  0.583  0.250",
                                "0.125  0.125  0.625  0.375",
                                "0.100  0.100  0.500  0.300",
                                "0.167  0.167  0.333  0.333"}) {
    if (!contains(table, row)) {
      why = "missing row <" + row + ">";
      return false;
    }
  }
  const IndexReport report = compute_report(
      pidx::testing::example_graph_problem(),
      {IndexKind::shapley, IndexKind::banzhaf_raw, IndexKind::banzhaf_norm,
       IndexKind::deegan_packel});
  if (*report.shapley != std::vector<Rational>{rat(1, 12), rat(1, 12),
                                               rat(7, 12), rat(1, 4)}) {
    why = "pivotal-rate rationals off";
    return false;
  }
  if (*report.banzhaf_raw != std::vector<Rational>{rat(1, 8), rat(1, 8),
                                                   rat(5, 8), rat(3, 8)}) {
    why = "raw swing-rate rationals off";
    return false;
  }
  if (*report.banzhaf_norm != std::vector<Rational>{rat(1, 10), rat(1, 10),
                                                    rat(1, 2), rat(3, 10)}) {
    why = "normalized swing-rate rationals off";
    return false;
  }
  if (*report.deegan_packel != std::vector<Rational>{rat(1, 6), rat(1, 6),
                                                     rat(1, 3), rat(1, 3)}) {
    why = "minimal-set share rationals off";
    return false;
  }
  return true;
}

// 2. The quota example's index table, including the documented difference
// between the raw swing rate and the crit-fraction column.
bool criterion_table_quota(std::string& why) {
  const std::string table =
      cli({"indices", "--input", data_file("threshold6.json")});
  for (const std::string row :
       {"0.617  0.200  0.117  0.033  0.033  0.000",
        "1.000  0.455  0.273  0.091  0.091  0.000",
        "0.524  0.238  0.143  0.048  0.048  0.000",
        "0.389  0.167  0.222  0.111  0.111  0.000"}) {
    if (!contains(table, row)) {
      why = "missing row <" + row + ">";
      return false;
    }
  }
  const SwingProfile profile =
      swing_profile_brute(pidx::testing::example_quota_oracle());
  if (profile.sigma != std::vector<std::uint64_t>{22, 10, 6, 2, 2, 0}) {
    why = "swing counts off";
    return false;
  }
  const BanzhafValues values = banzhaf(profile);
  // sigma / 2^5 is a different column from sigma / crit-containing-count.
  if (values.raw != std::vector<Rational>{rat(11, 16), rat(5, 16), rat(3, 16),
                                          rat(1, 16), rat(1, 16),
                                          Rational(0)}) {
    why = "raw swing-rate rationals off";
    return false;
  }
  if (!values.frac || *values.frac == values.raw) {
    why = "crit-fraction column should exist and differ from raw here";
    return false;
  }
  if (!contains(table, "0.688  0.313  0.188  0.063  0.063  0.000")) {
    why = "raw row missing from the printed table";
    return false;
  }
  return true;
}

// 3. Both enumeration routes reproduce both example families in canonical
// order, with the right minimum cardinalities.
bool criterion_families(std::string& why) {
  const auto graph_brute =
      enumerate_brute(pidx::testing::example_graph_oracle());
  const auto graph_marco =
      enumerate_marco_both(pidx::testing::example_graph_oracle());
  const auto quota_brute =
      enumerate_brute(pidx::testing::example_quota_oracle());
  const auto quota_marco =
      enumerate_marco_both(pidx::testing::example_quota_oracle());
  if (graph_brute.first != pidx::testing::example_graph_msps() ||
      graph_marco.first != graph_brute.first) {
    why = "graph example family off";
    return false;
  }
  if (quota_brute.first != pidx::testing::example_quota_msps() ||
      quota_marco.first != quota_brute.first) {
    why = "quota example family off";
    return false;
  }
  if (min_msp_size(graph_brute.first) != 1 ||
      min_msp_size(quota_brute.first) != 2) {
    why = "minimum cardinality off";
    return false;
  }
  return true;
}

// 4. Pinned memberships of the [7; 5,5,2,1] weighted game.
bool criterion_weighted_game(std::string& why) {
  ThresholdSpec spec;
  spec.weights = {5, 5, 2, 1};
  spec.quota = 7;
  const PredicateOracle p = make_threshold(spec);
  if (!p.evaluate(mask({1, 3, 4}))) {
    why = "{1,3,4} should win";
    return false;
  }
  if (!verify_msp(p, mask({1, 3}))) {
    why = "{1,3} should be a minimal winning coalition";
    return false;
  }
  if (p.evaluate(mask({1, 4}))) {
    why = "{1,4} should lose";
    return false;
  }
  return true;
}

// 5. Duality across 200 random instances of each kind, plus the
// hitting-set involution.
bool criterion_duality(std::string& why) {
  Rng rng(1001);
  for (int kind = 0; kind < 5; ++kind) {
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 3 + static_cast<int>(rng.bounded(10));  // 3..12
      const Problem problem = pidx::testing::random_problem(rng, m, kind);
      const auto [msps, mbps] = enumerate_brute(problem.make_oracle());
      if (!check_duality(msps, mbps)) {
        why = "duality failed on kind " + std::to_string(kind) + " trial " +
              std::to_string(trial);
        return false;
      }
      if (minimal_hitting_sets(minimal_hitting_sets(msps)) != msps) {
        why = "hitting sets are not an involution on kind " +
              std::to_string(kind);
        return false;
      }
    }
  }
  return true;
}

// 6. The three computation routes give identical exact rationals.
bool criterion_method_equivalence(std::string& why) {
  const std::vector<IndexKind> all{
      IndexKind::shapley, IndexKind::banzhaf_raw, IndexKind::banzhaf_frac,
      IndexKind::banzhaf_norm, IndexKind::deegan_packel};
  const auto columns_equal = [&all](const IndexReport& a,
                                    const IndexReport& b) {
    for (IndexKind kind : all) {
      if (a.column(kind).has_value() != b.column(kind).has_value()) {
        return false;
      }
      if (a.column(kind) && *a.column(kind) != *b.column(kind)) return false;
    }
    return true;
  };
  const auto family_problem_of = [](const Problem& problem) {
    const auto [msps, mbps] = enumerate_brute(problem.make_oracle());
    ExplicitFamilySpec spec;
    spec.ground_size = msps.ground_size();
    spec.minimal_sets = msps.members();
    return Problem{ProblemKind::monotone_family, std::nullopt, spec};
  };

  Rng rng(2002);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(rng.bounded(13));  // 2..14
    const Problem problem{ProblemKind::threshold, std::nullopt,
                          pidx::testing::random_threshold(rng, m)};
    const IndexReport brute = compute_report(problem, all,
                                             ComputeMethod::brute);
    const IndexReport dp =
        compute_report(problem, all, ComputeMethod::threshold_dp);
    const IndexReport family = compute_report(family_problem_of(problem), all,
                                              ComputeMethod::family);
    if (!columns_equal(brute, dp) || !columns_equal(brute, family)) {
      why = "threshold trial " + std::to_string(trial);
      return false;
    }
  }
  for (int kind = 1; kind < 5; ++kind) {
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 3 + static_cast<int>(rng.bounded(12));  // 3..14
      const Problem problem = pidx::testing::random_problem(rng, m, kind);
      const IndexReport brute =
          compute_report(problem, all, ComputeMethod::brute);
      const IndexReport family = compute_report(family_problem_of(problem),
                                                all, ComputeMethod::family);
      if (!columns_equal(brute, family)) {
        why = "kind " + std::to_string(kind) + " trial " +
              std::to_string(trial);
        return false;
      }
    }
  }
  return true;
}

// 7. Every extraction algorithm returns a member of the exhaustively
// enumerated family; deletion's call count is exact.
bool criterion_extraction(std::string& why) {
  Rng rng(3003);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + static_cast<int>(rng.bounded(12));  // 3..14
    const Problem problem = pidx::testing::random_problem(rng, m, trial);
    const PredicateOracle p = problem.make_oracle();
    const auto [msps, mbps] = enumerate_brute(p);
    for (ExtractAlgo algo :
         {ExtractAlgo::deletion, ExtractAlgo::quickxplain,
          ExtractAlgo::progression, ExtractAlgo::dichotomic}) {
      const ExtractionResult r = extract_msp(p, p.ground().full(), algo);
      if (!msps.contains(r.found)) {
        why = std::string("algorithm ") + to_string(algo) +
              " left the family on trial " + std::to_string(trial);
        return false;
      }
    }
    const ExtractionResult d =
        extract_msp(p, p.ground().full(), ExtractAlgo::deletion);
    if (d.oracle_calls != static_cast<std::uint64_t>(m) + 1) {
      why = "deletion call count " + std::to_string(d.oracle_calls) +
            " != " + std::to_string(m + 1);
      return false;
    }
  }
  return true;
}

// 8. Exact normalization on every generated instance; the quota example's
// dummy element scores zero in all five columns.
bool criterion_normalization(std::string& why) {
  Rng rng(4004);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng.bounded(11));
    const Problem problem = pidx::testing::random_problem(rng, m, trial);
    const SwingProfile profile = swing_profile_brute(problem.make_oracle());
    const auto [msps, mbps] = enumerate_brute(problem.make_oracle());
    if (sum(shapley(profile)) != Rational(1)) {
      why = "pivotal rates do not sum to one on trial " +
            std::to_string(trial);
      return false;
    }
    if (sum(banzhaf(profile).norm) != Rational(1)) {
      why = "normalized swing rates do not sum to one on trial " +
            std::to_string(trial);
      return false;
    }
    if (sum(deegan_packel(msps)) != Rational(1)) {
      why = "minimal-set shares do not sum to one on trial " +
            std::to_string(trial);
      return false;
    }
  }
  const IndexReport report = compute_report(
      pidx::testing::example_quota_problem(),
      {IndexKind::shapley, IndexKind::banzhaf_raw, IndexKind::banzhaf_frac,
       IndexKind::banzhaf_norm, IndexKind::deegan_packel});
  for (IndexKind kind :
       {IndexKind::shapley, IndexKind::banzhaf_raw, IndexKind::banzhaf_frac,
        IndexKind::banzhaf_norm, IndexKind::deegan_packel}) {
    if (report.column(kind)->back() != Rational(0)) {
      why = std::string("element 6 should score zero under ") +
            to_string(kind);
      return false;
    }
  }
  return true;
}

// 9. Sampled pivotal rates land within epsilon of the exact values on both
// examples, reproducibly.
bool criterion_sampling(std::string& why) {
  SampleConfig config;
  config.epsilon = 0.02;
  config.delta = 0.05;
  config.rng_seed = 42;
  for (const PredicateOracle& p : {pidx::testing::example_graph_oracle(),
                                   pidx::testing::example_quota_oracle()}) {
    const std::vector<Rational> exact = shapley(swing_profile_brute(p));
    const SampleEstimate estimate = sample_shapley(p, config);
    for (std::size_t k = 0; k < exact.size(); ++k) {
      const double target = exact[k].convert_to<double>();
      if (std::abs(estimate.estimate[k] - target) > config.epsilon) {
        why = "element " + std::to_string(k + 1) + " off by more than epsilon";
        return false;
      }
    }
    const SampleEstimate again = sample_shapley(p, config);
    if (again.estimate != estimate.estimate ||
        again.samples_used != estimate.samples_used) {
      why = "re-run under the same seed diverged";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"index table of the dominating-set example", 1.0,
       criterion_table_graph},
      {"index table of the quota example", 1.0, criterion_table_quota},
      {"family enumeration of both examples", 0.0, criterion_families},
      {"weighted game [7; 5,5,2,1] memberships", 0.0,
       criterion_weighted_game},
      {"duality on 200 random instances per kind", 60.0, criterion_duality},
      {"method equivalence on random instances", 60.0,
       criterion_method_equivalence},
      {"extraction soundness on 200 random instances", 0.0,
       criterion_extraction},
      {"exact normalization and dummy nullity", 0.0,
       criterion_normalization},
      {"sampling convergence at epsilon 0.02", 30.0, criterion_sampling},
  };

  bool all_passed = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criteria[k].body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criteria[k].budget_seconds > 0.0 &&
        seconds > criteria[k].budget_seconds) {
      ok = false;
      why = "over time budget of " +
            std::to_string(criteria[k].budget_seconds) + "s";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": "
         << criteria[k].title << " (" << std::fixed;
    line.precision(2);
    line << seconds << "s)";
    if (!ok) line << " -- " << why;
    std::cout << line.str() << '\n';
    all_passed = all_passed && ok;
  }
  return all_passed ? 0 : 1;
}
