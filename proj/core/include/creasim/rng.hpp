#pragma once

#include <array>
#include <cstdint>

namespace creasim {

/// Deterministic stream built on the Philox4x32-10 counter-based generator
/// (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC'11).
/// Counter-based keying gives every agent its own independent stream: two
/// Rng instances with different keys never share state, and replaying a
/// seed replays the exact draw sequence on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_real();

  /// Uniform integer in [0, n). n must be >= 1. Unbiased (masked rejection).
  std::uint64_t next_below(std::uint64_t n);

  /// Uniform double in [lo, hi).
  double next_real_range(double lo, double hi);

  /// One keyed Philox block; exposed for the known-answer tests.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                            std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_{};
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;  // empty
};

/// SplitMix64 finalizer. Stable across platforms; used to derive stream keys.
std::uint64_t mix64(std::uint64_t x);

/// Key for an agent's private stream: mix64(mix64(run_seed) ^ mix64(index+1)).
/// Distinct (seed, index) pairs get distinct, uncorrelated Philox keys, so
/// adding agents or reordering log-only work cannot shift another stream.
std::uint64_t derive_stream_seed(std::uint64_t run_seed, std::uint64_t index);

}  // namespace creasim
