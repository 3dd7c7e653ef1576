#pragma once
// Instance descriptions and the oracle factories that turn them into monotone
// predicates: weighted-threshold tests, dominating sets and vertex covers on
// simple graphs, hitting sets of explicit set systems, and predicates induced
// by an explicitly given family of minimal sets.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pidx/core.hpp"
#include "pidx/family.hpp"

namespace pidx {

struct ThresholdSpec {
  std::vector<std::uint64_t> weights;  // weights[e - 1] is element e's weight
  std::uint64_t quota = 0;

  int ground_size() const { return static_cast<int>(weights.size()); }
  std::uint64_t total_weight() const;  // overflow-checked
  void validate() const;  // 1 <= m <= 63, 1 <= quota <= total weight
};

struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<Element, Element>> edges;

  // Simple undirected graph: endpoints in range, no loops, no duplicate edges
  // (regardless of orientation).
  void validate() const;
};

struct SetFamilySpec {
  int ground_size = 0;
  std::vector<SubsetMask> sets;  // nonempty list of nonempty subsets

  void validate() const;
};

struct ExplicitFamilySpec {
  int ground_size = 0;
  std::vector<SubsetMask> minimal_sets;  // nonempty antichain of nonempty sets

  void validate() const;
};

// P(S) = 1 iff the total weight of S reaches the quota.
PredicateOracle make_threshold(const ThresholdSpec& spec);

// P(S) = 1 iff S is a dominating set: every vertex is in S or adjacent to S.
PredicateOracle make_dominating_set(const GraphSpec& spec);

// P(S) = 1 iff S covers every edge. Requires at least one edge, otherwise the
// predicate would be constant true.
PredicateOracle make_vertex_cover(const GraphSpec& spec);

// P(H) = 1 iff H intersects every set of the system.
PredicateOracle make_hitting_set(const SetFamilySpec& spec);

// P(S) = 1 iff S contains some member of the given antichain -- the unique
// monotone predicate whose minimal satisfying sets are exactly that family.
PredicateOracle make_explicit_family(const ExplicitFamilySpec& spec);

// Q(S) = 1 - P(N \ S). Monotone increasing and non-constant whenever P is;
// the minimal satisfying sets of Q are exactly the minimal breaks of P. The
// returned oracle has its own tally; each evaluation also counts once on the
// wrapped source oracle, since the wrapper goes through its counted path.
PredicateOracle complement_predicate(const PredicateOracle& p);

enum class ProblemKind {
  threshold,
  dominating_set,
  vertex_cover,
  hitting_set,
  monotone_family
};
const char* to_string(ProblemKind kind);

// A parsed problem file: one instance of a known kind, optionally named.
struct Problem {
  ProblemKind kind = ProblemKind::threshold;
  std::optional<std::string> name;
  std::variant<ThresholdSpec, GraphSpec, SetFamilySpec, ExplicitFamilySpec>
      spec;

  int ground_size() const;
  PredicateOracle make_oracle() const;

  // Kind-checked accessors; null when the problem is of another kind.
  const ThresholdSpec* threshold() const;
  const ExplicitFamilySpec* explicit_family() const;

  // Short provenance string for reports: the name when present, otherwise
  // "<kind> m=<size>".
  std::string describe() const;
};

}  // namespace pidx
