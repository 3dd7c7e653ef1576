#include "pidx/instances.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pidx {

std::uint64_t ThresholdSpec::total_weight() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : weights) {
    if (w > std::numeric_limits<std::uint64_t>::max() - total) {
      throw InvalidSpecError("total weight overflows 64 bits");
    }
    total += w;
  }
  return total;
}

void ThresholdSpec::validate() const {
  if (weights.empty() || weights.size() > 63) {
    throw InvalidSpecError("threshold instance needs 1..63 weights, got " +
                           std::to_string(weights.size()));
  }
  if (quota < 1) throw InvalidSpecError("quota must be at least 1");
  if (quota > total_weight()) {
    throw InvalidSpecError(
        "quota exceeds the total weight; the predicate would be constant "
        "false");
  }
}

void GraphSpec::validate() const {
  GroundSet ground(vertex_count);  // validates 1..63
  std::set<std::pair<Element, Element>> seen;
  for (auto [a, b] : edges) {
    if (!ground.contains(a) || !ground.contains(b)) {
      throw InvalidSpecError("edge endpoint outside vertices 1.." +
                             std::to_string(vertex_count));
    }
    if (a == b) {
      throw InvalidSpecError("self-loop at vertex " + std::to_string(a));
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw InvalidSpecError("duplicate edge {" + std::to_string(a) + "," +
                             std::to_string(b) + "}");
    }
  }
}

void SetFamilySpec::validate() const {
  GroundSet ground(ground_size);
  if (sets.empty()) {
    throw InvalidSpecError("set system must contain at least one set");
  }
  for (SubsetMask s : sets) {
    if (s.empty()) {
      throw InvalidSpecError(
          "set system contains an empty set; it cannot be hit");
    }
    if (!ground.valid(s)) {
      throw InvalidSpecError("set uses labels outside the ground set of size " +
                             std::to_string(ground_size));
    }
  }
}

void ExplicitFamilySpec::validate() const {
  if (minimal_sets.empty()) {
    throw InvalidSpecError("family must contain at least one minimal set");
  }
  for (SubsetMask s : minimal_sets) {
    if (s.empty()) {
      throw InvalidSpecError(
          "family contains the empty set; the predicate would be constant "
          "true");
    }
  }
  // Reuses the antichain validation (and range checks) of the family type.
  MinimalFamily(ground_size, FamilyKind::msp, minimal_sets);
}

PredicateOracle make_threshold(const ThresholdSpec& spec) {
  spec.validate();
  return PredicateOracle(
      GroundSet(spec.ground_size()),
      [weights = spec.weights, quota = spec.quota](SubsetMask s) {
        std::uint64_t total = 0;
        for (Element e : s) total += weights[static_cast<std::size_t>(e) - 1];
        return total >= quota;
      });
}

PredicateOracle make_dominating_set(const GraphSpec& spec) {
  spec.validate();
  const int m = spec.vertex_count;
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(m));
  for (int v = 1; v <= m; ++v) {
    closed[v - 1] = std::uint64_t{1} << (v - 1);
  }
  for (auto [a, b] : spec.edges) {
    closed[a - 1] |= std::uint64_t{1} << (b - 1);
    closed[b - 1] |= std::uint64_t{1} << (a - 1);
  }
  return PredicateOracle(GroundSet(m), [closed](SubsetMask s) {
    for (std::uint64_t nbhd : closed) {
      if ((nbhd & s.value()) == 0) return false;
    }
    return true;
  });
}

namespace {

PredicateOracle make_intersects_all(int ground_size,
                                    std::vector<std::uint64_t> targets) {
  return PredicateOracle(GroundSet(ground_size), [targets](SubsetMask s) {
    for (std::uint64_t t : targets) {
      if ((t & s.value()) == 0) return false;
    }
    return true;
  });
}

}  // namespace

PredicateOracle make_vertex_cover(const GraphSpec& spec) {
  spec.validate();
  if (spec.edges.empty()) {
    throw InvalidSpecError(
        "vertex cover needs at least one edge; the predicate would be "
        "constant true");
  }
  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(spec.edges.size());
  for (auto [a, b] : spec.edges) {
    edge_masks.push_back((std::uint64_t{1} << (a - 1)) |
                         (std::uint64_t{1} << (b - 1)));
  }
  return make_intersects_all(spec.vertex_count, std::move(edge_masks));
}

PredicateOracle make_hitting_set(const SetFamilySpec& spec) {
  spec.validate();
  std::vector<std::uint64_t> targets;
  targets.reserve(spec.sets.size());
  for (SubsetMask s : spec.sets) targets.push_back(s.value());
  return make_intersects_all(spec.ground_size, std::move(targets));
}

PredicateOracle make_explicit_family(const ExplicitFamilySpec& spec) {
  spec.validate();
  return PredicateOracle(GroundSet(spec.ground_size),
                         [members = spec.minimal_sets](SubsetMask s) {
                           for (SubsetMask z : members) {
                             if (z.subset_of(s)) return true;
                           }
                           return false;
                         });
}

PredicateOracle complement_predicate(const PredicateOracle& p) {
  const GroundSet ground = p.ground();
  return PredicateOracle(ground, [p, ground](SubsetMask s) {
    return !p.evaluate(ground.complement(s));
  });
}

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::threshold: return "threshold";
    case ProblemKind::dominating_set: return "dominating_set";
    case ProblemKind::vertex_cover: return "vertex_cover";
    case ProblemKind::hitting_set: return "hitting_set";
    case ProblemKind::monotone_family: return "monotone_family";
  }
  return "unknown";
}

int Problem::ground_size() const {
  switch (kind) {
    case ProblemKind::threshold:
      return std::get<ThresholdSpec>(spec).ground_size();
    case ProblemKind::dominating_set:
    case ProblemKind::vertex_cover:
      return std::get<GraphSpec>(spec).vertex_count;
    case ProblemKind::hitting_set:
      return std::get<SetFamilySpec>(spec).ground_size;
    case ProblemKind::monotone_family:
      return std::get<ExplicitFamilySpec>(spec).ground_size;
  }
  throw Error("unreachable problem kind");
}

PredicateOracle Problem::make_oracle() const {
  switch (kind) {
    case ProblemKind::threshold:
      return make_threshold(std::get<ThresholdSpec>(spec));
    case ProblemKind::dominating_set:
      return make_dominating_set(std::get<GraphSpec>(spec));
    case ProblemKind::vertex_cover:
      return make_vertex_cover(std::get<GraphSpec>(spec));
    case ProblemKind::hitting_set:
      return make_hitting_set(std::get<SetFamilySpec>(spec));
    case ProblemKind::monotone_family:
      return make_explicit_family(std::get<ExplicitFamilySpec>(spec));
  }
  throw Error("unreachable problem kind");
}

const ThresholdSpec* Problem::threshold() const {
  return kind == ProblemKind::threshold ? &std::get<ThresholdSpec>(spec)
                                        : nullptr;
}

const ExplicitFamilySpec* Problem::explicit_family() const {
  return kind == ProblemKind::monotone_family
             ? &std::get<ExplicitFamilySpec>(spec)
             : nullptr;
}

std::string Problem::describe() const {
  if (name) return *name;
  return std::string(to_string(kind)) + " m=" + std::to_string(ground_size());
}

}  // namespace pidx
