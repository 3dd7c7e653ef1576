#pragma once
// Ground sets, packed subset masks, and counted oracles for monotone set
// predicates. Everything downstream (extraction, enumeration, indices,
// sampling) talks to predicates exclusively through PredicateOracle.

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pidx {

using Element = int;  // element labels are 1-based: 1..m

// Error taxonomy. The CLI maps these onto process exit codes (see cli.cpp):
// parse/spec -> 2, precondition/subset -> 3, size cap -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSpecError : Error { using Error::Error; };
struct InvalidSubsetError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct SizeCapError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// A subset of {1..m} packed into one 64-bit word: bit k set <=> element k+1
// present. The word representation caps ground sets at 63 elements, which is
// far beyond anything the exhaustive paths can touch anyway.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<Element> labels) {
    SubsetMask s;
    for (Element e : labels) s = s.with(e);
    return s;
  }
  static SubsetMask from_labels(const std::vector<Element>& labels) {
    SubsetMask s;
    for (Element e : labels) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t value() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const {
    return e >= 1 && e <= 64 && (bits_ >> (e - 1) & 1u) != 0;
  }
  constexpr bool subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr SubsetMask with(Element e) const {
    return SubsetMask(bits_ | (std::uint64_t{1} << (e - 1)));
  }
  constexpr SubsetMask without(Element e) const {
    return SubsetMask(bits_ & ~(std::uint64_t{1} << (e - 1)));
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;

  // Iterates the contained labels in ascending order.
  class const_iterator {
   public:
    using value_type = Element;
    constexpr const_iterator() = default;
    constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}
    Element operator*() const { return std::countr_zero(rest_) + 1; }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  const_iterator begin() const { return const_iterator(bits_); }
  const_iterator end() const { return const_iterator(0); }

  std::vector<Element> labels() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (Element e : *this) out.push_back(e);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, SubsetMask s);

class GroundSet {
 public:
  explicit GroundSet(int size);
  int size() const { return size_; }
  SubsetMask full() const {
    return SubsetMask((std::uint64_t{1} << size_) - 1);
  }
  bool valid(SubsetMask s) const { return s.subset_of(full()); }
  bool contains(Element e) const { return e >= 1 && e <= size_; }
  SubsetMask complement(SubsetMask s) const { return full() - s; }

 private:
  int size_;
};

// A counted evaluator of one monotone increasing predicate P : 2^N -> {0,1}.
// Callers are expected to hand in deterministic, monotone, non-constant
// functions; determinism and monotonicity are spot-checkable through
// check_monotone_sample below. Copies share the evaluation tally, and the
// tally is atomic so partitioned exhaustive scans may evaluate concurrently.
class PredicateOracle {
 public:
  PredicateOracle(GroundSet ground, std::function<bool(SubsetMask)> fn);

  const GroundSet& ground() const { return ground_; }

  // The one counted path: validates the mask, bumps the tally, evaluates.
  bool evaluate(SubsetMask s) const;

  std::uint64_t calls() const {
    return calls_->load(std::memory_order_relaxed);
  }
  void reset_calls() const { calls_->store(0, std::memory_order_relaxed); }

 private:
  GroundSet ground_;
  std::function<bool(SubsetMask)> fn_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

// Characteristic-function view of the predicate: 1 if satisfied, else 0.
int cf(const PredicateOracle& p, SubsetMask s);

// cf(s) - cf(s \ {i}); by monotonicity this is 1 exactly when i is critical
// for s. Requires i in s.
int delta(const PredicateOracle& p, Element i, SubsetMask s);

bool is_critical_for_set(const PredicateOracle& p, Element i, SubsetMask s);

// i in b is critical for the break b: removing b from the ground set kills
// the predicate, but keeping i alive (removing only b \ {i}) preserves it.
bool is_critical_for_break(const PredicateOracle& p, Element i, SubsetMask b);

struct MonotonicityWitness {
  SubsetMask inner;
  SubsetMask outer;
  std::string reason;
};

// Randomized spot check: asserts the non-constancy endpoints P(empty) = 0 and
// P(N) = 1, then draws `trials` nested pairs Y <= X and checks
// P(Y) <= P(X). Returns the first violation found, if any.
std::optional<MonotonicityWitness> find_monotonicity_violation(
    const PredicateOracle& p, std::uint64_t trials, std::uint64_t rng_seed);

bool check_monotone_sample(const PredicateOracle& p, std::uint64_t trials,
                           std::uint64_t rng_seed);

}  // namespace pidx
