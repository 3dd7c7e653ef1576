#pragma once
// Canonical families of minimal satisfying sets (msp) and minimal breaks
// (mbp). Members are kept in canonical order -- cardinality ascending, ties by
// numeric mask value -- so family equality is plain vector equality and every
// rendered output is reproducible.

#include <cstddef>
#include <vector>

#include "pidx/core.hpp"

namespace pidx {

enum class FamilyKind { msp, mbp };
const char* to_string(FamilyKind kind);

// Canonical order: cardinality ascending, then numeric mask value ascending.
bool canonical_less(SubsetMask a, SubsetMask b);

struct FamilyRestriction;

class MinimalFamily {
 public:
  // Validating constructor: sorts members canonically, rejects labels outside
  // the ground set and any comparable pair (duplicates included) -- a family
  // of minimal sets is an antichain by construction.
  MinimalFamily(int ground_size, FamilyKind kind,
                std::vector<SubsetMask> members);

  // For producers whose output is canonical and incomparable by construction
  // (exhaustive enumeration over all masks, hitting-set computation after its
  // minimality filter). Skips the quadratic antichain validation.
  static MinimalFamily from_canonical_unchecked(int ground_size,
                                                FamilyKind kind,
                                                std::vector<SubsetMask> members);

  int ground_size() const { return ground_size_; }
  FamilyKind kind() const { return kind_; }
  const std::vector<SubsetMask>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(SubsetMask s) const;

  // Members containing the given element, canonical order preserved.
  FamilyRestriction restrict_to(Element i) const;

  friend bool operator==(const MinimalFamily& a, const MinimalFamily& b) {
    return a.ground_size_ == b.ground_size_ && a.kind_ == b.kind_ &&
           a.members_ == b.members_;
  }
  friend bool operator!=(const MinimalFamily& a, const MinimalFamily& b) {
    return !(a == b);
  }

 private:
  MinimalFamily() : ground_size_(0), kind_(FamilyKind::msp) {}
  int ground_size_;
  FamilyKind kind_;
  std::vector<SubsetMask> members_;
};

struct FamilyRestriction {
  Element element = 0;
  std::vector<SubsetMask> members;
};

// Cardinality of the smallest member. For dominating-set instances this is
// the domination number; for weighted games the smallest winning coalition.
int min_msp_size(const MinimalFamily& family);

}  // namespace pidx
