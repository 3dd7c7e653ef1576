#pragma once
// Pinned, portable pseudo-random generator used by every sampled code path.
//
// xoshiro256** (Blackman & Vigna, public-domain reference) with state seeded
// through splitmix64. The byte-for-byte output stream for a given seed is part
// of the observable contract -- sampled estimates must reproduce bit-for-bit
// across platforms and standard libraries -- so implementation-defined
// facilities (std::shuffle, std::uniform_int_distribution, ...) are never used
// where results are reported.
//
// Substream rule: worker k draws from Rng(seed + k * 0x9E3779B97F4A7C15).
// Rng(seed) and Rng::substream(seed, 0) are the same stream.

#include <array>
#include <cstdint>

namespace pidx {

inline constexpr std::uint64_t kRngStreamStride = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  static Rng substream(std::uint64_t seed, std::uint64_t worker) {
    return Rng(seed + worker * kRngStreamStride);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, n); n must be nonzero. Classic rejection scheme:
  // discard the low 2^64 mod n values so every residue is equally likely.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

}  // namespace pidx
