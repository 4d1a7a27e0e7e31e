#include "interleave/rng.hpp"

#include <stdexcept>

namespace interleave {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t worker) {
  return Rng(splitmix64(seed + (worker + 1) * 0x9E3779B97F4A7C15ULL));
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = hi - lo + 1;  // 0 means the full 64-bit range
  if (span == 0) return next();
  // Reject the lowest 2^64 mod span values so that the rest split evenly.
  const std::uint64_t threshold = (0 - span) % span;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return lo + x % span;
  }
}

BigInt Rng::uniform(const BigInt& w) {
  if (w < 1) throw std::invalid_argument("Rng::uniform: bound must be at least 1");
  if (w == 1) return 1;
  const BigInt top = w - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t blocks = (bits + 63) / 64;
  BigInt x, block;
  for (;;) {
    x = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::uint64_t r = next();
      mpz_import(block.get_mpz_t(), 1, 1, sizeof r, 0, 0, &r);
      x <<= 64;
      x += block;
    }
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x <= top) return x + 1;
  }
}

}  // namespace interleave
