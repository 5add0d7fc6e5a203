#pragma once

#include <cstdint>

namespace bmg {

/// SplitMix64 (Steele, Lea, Flood). 64-bit state, one add and a fixed mixing
/// function per draw, so streams are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace bmg
