#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "interleave/enumerate.hpp"
#include "interleave/numeric.hpp"
#include "interleave/run_sampling.hpp"

namespace interleave {

/// Exact totals over every plane tree of one size.
struct SweepTotals {
  std::size_t n = 0;
  std::uint64_t trees = 0;
  BigInt run_sum = 0;        // Σ ℓ_T
  BigInt run_product = 1;    // Π ℓ_T
  BigInt semantic_sum = 0;   // Σ n_T
  BigInt cut_sum = 0;        // Σ admissible cuts
  std::vector<BigInt> level_sums;  // by depth from the root

  void merge(const SweepTotals& other);
  /// (Π ℓ_T)^{1/C_n}
  Real geometric_mean(mpfr_prec_t bits = 128) const;
};

/// Partitioning is fixed by `chunks`, not by the thread count, so results
/// (and sampled runs) do not depend on how many threads execute them.
inline constexpr std::size_t kDefaultChunks = 64;

SweepTotals sweep_trees_serial(std::size_t n, std::size_t limit = kDefaultEnumerationLimit,
                               std::size_t chunks = kDefaultChunks);
SweepTotals sweep_trees(std::size_t n, std::size_t limit = kDefaultEnumerationLimit,
                        std::size_t chunks = kDefaultChunks);

/// `count` runs of t. Chunk c draws its share from Rng::derive(seed, c);
/// the output is in chunk order.
std::vector<Run> sample_runs_serial(const WeightedTree& t, std::uint64_t seed, std::size_t count,
                                    std::size_t chunks = kDefaultChunks);
std::vector<Run> sample_runs(const WeightedTree& t, std::uint64_t seed, std::size_t count,
                             std::size_t chunks = kDefaultChunks);

namespace detail {
SweepTotals sweep_range(const TreeEnumerator& e, std::uint64_t begin, std::uint64_t end);
void sample_chunk(const WeightedTree& t, std::uint64_t seed, std::size_t chunk, std::size_t begin,
                  std::size_t end, std::vector<Run>& out);
inline std::uint64_t chunk_begin(std::uint64_t total, std::size_t chunks, std::size_t c) {
  return total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
}
}  // namespace detail

}  // namespace interleave
