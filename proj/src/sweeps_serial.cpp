#include "interleave/cuts_profiles.hpp"
#include "interleave/exact_counts.hpp"
#include "interleave/sweeps.hpp"

namespace interleave {

void SweepTotals::merge(const SweepTotals& other) {
  trees += other.trees;
  run_sum += other.run_sum;
  run_product *= other.run_product;
  semantic_sum += other.semantic_sum;
  cut_sum += other.cut_sum;
  if (level_sums.size() < other.level_sums.size()) level_sums.resize(other.level_sums.size(), BigInt(0));
  for (std::size_t l = 0; l < other.level_sums.size(); ++l) level_sums[l] += other.level_sums[l];
}

Real SweepTotals::geometric_mean(mpfr_prec_t bits) const {
  const mpfr_prec_t work = bits + 32;
  return exp(log(Real(run_product, work)) / Real(static_cast<long>(trees), work));
}

namespace detail {

SweepTotals sweep_range(const TreeEnumerator& e, std::uint64_t begin, std::uint64_t end) {
  SweepTotals s;
  s.n = e.size();
  s.level_sums.assign(e.size(), BigInt(0));
  e.for_each(
      [&s](std::uint64_t, const SyntaxTree& t) {
        const BigInt runs = hook_count(WeightedTree(t));
        const LevelProfile p = level_profile(t);
        ++s.trees;
        s.run_sum += runs;
        s.run_product *= runs;
        for (std::size_t l = 0; l < p.size(); ++l) {
          s.level_sums[l] += p.counts[l];
          s.semantic_sum += p.counts[l];
        }
        s.cut_sum += cut_count(t);
      },
      begin, end);
  return s;
}

void sample_chunk(const WeightedTree& t, std::uint64_t seed, std::size_t chunk, std::size_t begin,
                  std::size_t end, std::vector<Run>& out) {
  Rng rng = Rng::derive(seed, chunk);
  for (std::size_t k = begin; k < end; ++k) out[k] = sample_run(t, rng);
}

}  // namespace detail

SweepTotals sweep_trees_serial(std::size_t n, std::size_t limit, std::size_t chunks) {
  const TreeEnumerator e(n, limit);
  SweepTotals total;
  total.n = n;
  total.level_sums.assign(n, BigInt(0));
  for (std::size_t c = 0; c < chunks; ++c)
    total.merge(detail::sweep_range(e, detail::chunk_begin(e.count(), chunks, c),
                                    detail::chunk_begin(e.count(), chunks, c + 1)));
  return total;
}

std::vector<Run> sample_runs_serial(const WeightedTree& t, std::uint64_t seed, std::size_t count,
                                    std::size_t chunks) {
  std::vector<Run> out(count);
  for (std::size_t c = 0; c < chunks; ++c)
    detail::sample_chunk(t, seed, c, detail::chunk_begin(count, chunks, c), detail::chunk_begin(count, chunks, c + 1),
                         out);
  return out;
}

}  // namespace interleave
