#pragma once
// Extraction of one minimal satisfying set (or minimal break) from a seed,
// with per-run oracle-call accounting. All four algorithms are deterministic:
// they scan elements in ascending label order and split spans with the extra
// element on the lower-label side, so repeated runs return the same set.

#include <cstdint>

#include "pidx/core.hpp"

namespace pidx {

enum class ExtractAlgo { deletion, quickxplain, progression, dichotomic };
const char* to_string(ExtractAlgo algo);

struct ExtractionResult {
  SubsetMask found;
  std::uint64_t oracle_calls = 0;  // includes the seed precondition check
  ExtractAlgo algorithm = ExtractAlgo::deletion;
};

// True iff candidate satisfies the predicate and no single-element removal
// does. Always performs exactly 1 + |candidate| oracle calls, which is the
// whole point: minimality is checkable with linearly many queries instead of
// one per subset.
bool verify_msp(const PredicateOracle& p, SubsetMask candidate);

// True iff candidate is a minimal break: removing it kills the predicate and
// removing any proper subset of it does not. Exactly 1 + |candidate| calls.
bool verify_mbp(const PredicateOracle& p, SubsetMask candidate);

// Shrinks a satisfying seed to a minimal satisfying subset. Requires
// P(seed) = 1. Deletion performs exactly |seed| + 1 oracle calls.
ExtractionResult extract_msp(const PredicateOracle& p, SubsetMask seed,
                             ExtractAlgo algo);

// Extracts a minimal break by running the chosen algorithm on the complement
// predicate with the full ground set as seed (always satisfying there).
// Reported calls are the complement oracle's evaluations.
ExtractionResult extract_mbp(const PredicateOracle& p, ExtractAlgo algo);

// Grows a non-satisfying seed to a maximal non-satisfying set: the result T
// fails the predicate while T + {e} satisfies it for every absent e. The
// complement of T is a minimal break. Requires P(seed) = 0; performs exactly
// 1 + (m - |seed|) oracle calls.
SubsetMask grow_to_coatom(const PredicateOracle& p, SubsetMask seed);

}  // namespace pidx
