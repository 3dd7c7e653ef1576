#pragma once
// Power indices of elements with respect to a monotone predicate. The swing
// profile is the sufficient statistic shared by the Shapley-Shubik and
// Banzhaf computations: swing counts per element, stratified by set
// cardinality, plus the count of satisfying sets containing any critical
// element. Three interchangeable routes produce it -- exhaustive tabulation,
// the predicate induced by a known minimal-set family, and a
// cardinality-by-weight tabulation special to threshold instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pidx/enumeration.hpp"
#include "pidx/family.hpp"
#include "pidx/instances.hpp"
#include "pidx/rational.hpp"

namespace pidx {

struct SwingProfile {
  int ground_size = 0;
  // sigma[e - 1]: number of satisfying sets S with e critical for S.
  std::vector<std::uint64_t> sigma;
  // sigma_by_size[e - 1][s]: those with |S| = s exactly, s in 1..m.
  std::vector<std::vector<std::uint64_t>> sigma_by_size;
  // Number of satisfying sets containing at least one critical element.
  // Absent when the producing route cannot afford the 2^m tabulation.
  std::optional<std::uint64_t> crit_containing_sets;

  std::uint64_t sigma_total() const;
};

// Reads a profile off an existing truth table (no oracle calls).
SwingProfile swing_profile_from_table(const std::vector<std::uint8_t>& sat,
                                      int ground_size);

// Reference route: tabulate the predicate, scan every satisfying set.
SwingProfile swing_profile_brute(const PredicateOracle& p,
                                 int cap = kDefaultBruteCap, int threads = 1);

// Profile of the predicate induced by a known family of minimal satisfying
// sets (kind msp, nonempty). Definitionally equal to the brute profile of
// the induced oracle.
SwingProfile swing_profile_from_family(const MinimalFamily& family,
                                       int cap = kDefaultBruteCap,
                                       int threads = 1);

// Threshold fast path: for each element, count swing partners by
// (cardinality, weight) with a 0/1-knapsack tabulation, never enumerating
// subsets. crit_containing_sets is filled from a 2^m scan only when the
// ground set is within the exhaustive cap, otherwise left absent.
SwingProfile swing_profile_threshold_dp(const ThresholdSpec& spec,
                                        int brute_cap = kDefaultBruteCap);

// Shapley-Shubik: I(e) = sum over sizes s of
// sigma_by_size[e][s] / (m * C(m-1, s-1)). Sums to 1 across elements.
std::vector<Rational> shapley(const SwingProfile& profile);

// The three Banzhaf readings. raw divides swings by 2^(m-1); norm divides by
// the total swing count (sums to 1); frac divides by the number of satisfying
// sets containing any critical element and is only computable when that count
// is available.
struct BanzhafValues {
  std::vector<Rational> raw;
  std::vector<Rational> norm;
  std::optional<std::vector<Rational>> frac;
};
BanzhafValues banzhaf(const SwingProfile& profile);

// Deegan-Packel: every minimal set splits an equal share of 1/|family| evenly
// among its elements. Requires a nonempty msp family.
std::vector<Rational> deegan_packel(const MinimalFamily& family);

enum class IndexKind {
  shapley,
  banzhaf_raw,
  banzhaf_frac,
  banzhaf_norm,
  deegan_packel
};
const char* to_string(IndexKind kind);
std::optional<IndexKind> index_kind_from_string(const std::string& name);

enum class ComputeMethod { automatic, brute, family, threshold_dp };
const char* to_string(ComputeMethod method);
std::optional<ComputeMethod> compute_method_from_string(
    const std::string& name);

struct IndexReport {
  int ground_size = 0;
  ComputeMethod method = ComputeMethod::brute;  // the route that actually ran
  std::string provenance;
  int precision = 3;  // decimal places for rendered values
  // A column is present iff it was requested and computable.
  std::optional<std::vector<Rational>> shapley;
  std::optional<std::vector<Rational>> banzhaf_raw;
  std::optional<std::vector<Rational>> banzhaf_frac;
  std::optional<std::vector<Rational>> banzhaf_norm;
  std::optional<std::vector<Rational>> deegan_packel;
  // Requested columns that the chosen route cannot supply (today that is only
  // banzhaf_frac above the exhaustive cap).
  std::vector<IndexKind> unavailable;

  const std::optional<std::vector<Rational>>& column(IndexKind kind) const;
};

// Computes the requested indices for a problem. `automatic` resolves to
// threshold_dp for threshold instances, family for explicit-family instances,
// and brute otherwise. Inapplicable explicit methods (family on a graph
// problem, threshold_dp on a set system) are precondition errors, as is a
// deegan_packel request on a route with no family within reach.
IndexReport compute_report(const Problem& problem,
                           const std::vector<IndexKind>& requested,
                           ComputeMethod method = ComputeMethod::automatic,
                           int precision = 3, int brute_cap = kDefaultBruteCap,
                           int threads = 1);

}  // namespace pidx
