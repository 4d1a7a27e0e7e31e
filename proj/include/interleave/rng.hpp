#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "interleave/numeric.hpp"

namespace interleave {

/// Seedable generator. Same seed, same stream, on every platform: the
/// engine is std::mt19937_64, whose output sequence the standard fixes, and
/// all range reductions below are done here rather than by <random>
/// distributions (whose algorithms are implementation-defined).
class Rng {
public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";
  static constexpr int kVersion = 1;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for parallel worker `worker`:
  /// seed' = splitmix64(seed + (worker + 1) · 0x9E3779B97F4A7C15).
  static Rng derive(std::uint64_t seed, std::uint64_t worker);

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi] by rejection; no modulo bias.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  /// Uniform in [1, w] for w >= 1, by rejection over 64-bit blocks.
  BigInt uniform(const BigInt& w);

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace interleave
