#pragma once
// Complete enumeration of minimal satisfying sets and minimal breaks, the
// hitting-set duality between them, and the seed-shrink-grow enumerator that
// avoids full tabulation.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pidx/core.hpp"
#include "pidx/family.hpp"

namespace pidx {

// Exhaustive paths allocate and fill a 2^m truth table; the default cap keeps
// that to a million-ish entries unless the caller raises it explicitly.
inline constexpr int kDefaultBruteCap = 20;
// The seed-shrink-grow enumerator keeps an explicit bitmap of explored masks.
inline constexpr int kMarcoCap = 24;

// Truth table of the predicate over all 2^m masks, indexed by mask value.
// With threads > 1 the mask range is partitioned across workers; the shared
// call tally is atomic, so the count stays exact.
std::vector<std::uint8_t> tabulate(const PredicateOracle& p,
                                   int cap = kDefaultBruteCap, int threads = 1);

// Derivations from an existing truth table (no further oracle calls).
MinimalFamily msp_family_from_table(const std::vector<std::uint8_t>& sat,
                                    int ground_size);
MinimalFamily mbp_family_from_table(const std::vector<std::uint8_t>& sat,
                                    int ground_size);

// Reference enumerator: tabulates the predicate, reads the minimal satisfying
// sets straight off the table, and reads the minimal breaks off the
// complement predicate's table (a break is minimal exactly when its removal
// kills the predicate but re-adding any one element revives it).
std::pair<MinimalFamily, MinimalFamily> enumerate_brute(
    const PredicateOracle& p, int cap = kDefaultBruteCap, int threads = 1);

// Seed-shrink-grow enumeration. Repeatedly picks the smallest unexplored mask
// in canonical (cardinality, value) order; a satisfying seed is shrunk to a
// minimal set and all its supersets are blocked, a non-satisfying seed is
// grown to a maximal non-satisfying set and all its subsets are blocked.
// Stops early once `limit` members of the requested kind are found.
MinimalFamily enumerate_marco(const PredicateOracle& p, FamilyKind kind,
                              std::optional<std::size_t> limit = std::nullopt);

// Full run of the same procedure, returning both families.
std::pair<MinimalFamily, MinimalFamily> enumerate_marco_both(
    const PredicateOracle& p);

// All minimal hitting sets of a nonempty family, as a family of the flipped
// kind: the minimal breaks are exactly the minimal hitting sets of the
// minimal satisfying sets, and vice versa.
MinimalFamily minimal_hitting_sets(const MinimalFamily& family);

// True iff the two families are each other's minimal hitting sets. Requires
// nonempty families over the same ground size.
bool check_duality(const MinimalFamily& msps, const MinimalFamily& mbps);

}  // namespace pidx
