#include <exception>

#include "interleave/sweeps.hpp"

namespace interleave {

SweepTotals sweep_trees(std::size_t n, std::size_t limit, std::size_t chunks) {
  const TreeEnumerator e(n, limit);
  std::vector<SweepTotals> parts(chunks);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    try {
      parts[c] = detail::sweep_range(e, detail::chunk_begin(e.count(), chunks, c),
                                     detail::chunk_begin(e.count(), chunks, c + 1));
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  SweepTotals total;
  total.n = n;
  total.level_sums.assign(n, BigInt(0));
  for (const SweepTotals& p : parts) total.merge(p);
  return total;
}

std::vector<Run> sample_runs(const WeightedTree& t, std::uint64_t seed, std::size_t count, std::size_t chunks) {
  std::vector<Run> out(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    try {
      detail::sample_chunk(t, seed, c, detail::chunk_begin(count, chunks, c), detail::chunk_begin(count, chunks, c + 1),
                           out);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace interleave
