#include "pidx/family.hpp"

#include <algorithm>
#include <sstream>

namespace pidx {

const char* to_string(FamilyKind kind) {
  return kind == FamilyKind::msp ? "msp" : "mbp";
}

bool canonical_less(SubsetMask a, SubsetMask b) {
  if (a.cardinality() != b.cardinality())
    return a.cardinality() < b.cardinality();
  return a.value() < b.value();
}

namespace {

void sort_canonical(std::vector<SubsetMask>& members) {
  std::sort(members.begin(), members.end(), canonical_less);
}

}  // namespace

MinimalFamily::MinimalFamily(int ground_size, FamilyKind kind,
                             std::vector<SubsetMask> members)
    : ground_size_(ground_size), kind_(kind), members_(std::move(members)) {
  const GroundSet ground(ground_size);  // validates 1..63
  sort_canonical(members_);
  for (SubsetMask s : members_) {
    if (!ground.valid(s)) {
      throw InvalidSpecError(
          "family member uses labels outside the ground set of size " +
          std::to_string(ground_size));
    }
  }
  // Canonical order puts any subset before its supersets, but a full pairwise
  // sweep keeps the diagnostic exact for small parse-scale inputs.
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (members_[i].subset_of(members_[j]) ||
          members_[j].subset_of(members_[i])) {
        std::ostringstream msg;
        msg << "family is not an antichain: " << members_[i] << " and "
            << members_[j] << " are comparable";
        throw InvalidSpecError(msg.str());
      }
    }
  }
}

MinimalFamily MinimalFamily::from_canonical_unchecked(
    int ground_size, FamilyKind kind, std::vector<SubsetMask> members) {
  MinimalFamily family;
  family.ground_size_ = ground_size;
  family.kind_ = kind;
  family.members_ = std::move(members);
  sort_canonical(family.members_);
  return family;
}

bool MinimalFamily::contains(SubsetMask s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

FamilyRestriction MinimalFamily::restrict_to(Element i) const {
  if (i < 1 || i > ground_size_) {
    throw PreconditionError("restriction element " + std::to_string(i) +
                            " is outside the ground set");
  }
  FamilyRestriction out;
  out.element = i;
  for (SubsetMask s : members_) {
    if (s.contains(i)) out.members.push_back(s);
  }
  return out;
}

int min_msp_size(const MinimalFamily& family) {
  if (family.empty()) {
    throw PreconditionError("minimum member size of an empty family");
  }
  // Canonical order sorts by cardinality first.
  return family.members().front().cardinality();
}

}  // namespace pidx
