#pragma once

#include <cstdint>

namespace groth {

// 64-bit linear congruential generator, Knuth's MMIX constants:
// state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64).
// Fixed here and documented in the README so seeded sampling reproduces
// byte-for-byte on every platform.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }

  // Uniform-ish in [0, m) via the multiply-shift reduction; m > 0.
  std::uint64_t below(std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * m) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace groth
