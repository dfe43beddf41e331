#pragma once

#include <array>
#include <cstdint>

namespace mtwu {

/// splitmix64, used to expand a 64-bit seed into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0. State words are four consecutive splitmix64 outputs.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) noexcept;
  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound) by rejection: draws below
  /// (2^64 - bound) mod bound are discarded, then r mod bound.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace mtwu
