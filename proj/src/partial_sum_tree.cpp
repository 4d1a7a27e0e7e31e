#include "interleave/partial_sum_tree.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace interleave {

PartialSumTree::PartialSumTree(std::span<const WeightedEntry> entries) {
  const std::size_t n = entries.size();
  ids_.resize(n + 1);
  weights_.resize(n + 1);
  left_.assign(n + 1, 0);
  right_.assign(n + 1, 0);
  slot_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = entries[k];
    if (e.weight < 0) throw std::invalid_argument("partial sum tree: negative weight for id " + std::to_string(e.id));
    if (!slot_.emplace(e.id, k + 1).second)
      throw std::invalid_argument("partial sum tree: duplicate id " + std::to_string(e.id));
    ids_[k + 1] = e.id;
    weights_[k + 1] = static_cast<std::uint64_t>(e.weight);
  }
  for (std::size_t k = n; k >= 1; --k) {
    if (2 * k <= n) left_[k] = subtree(2 * k);
    if (2 * k + 1 <= n) right_[k] = subtree(2 * k + 1);
  }
}

std::size_t PartialSumTree::depth() const {
  return entries() == 0 ? 0 : static_cast<std::size_t>(std::bit_width(entries()));
}

std::uint64_t PartialSumTree::weight(std::uint64_t id) const {
  auto it = slot_.find(id);
  if (it == slot_.end()) throw std::out_of_range("partial sum tree: unknown id " + std::to_string(id));
  return weights_[it->second];
}

std::uint64_t PartialSumTree::sample(Rng& rng) const {
  const std::uint64_t t = total();
  if (t == 0) throw std::logic_error("partial sum tree: cannot sample from an empty multiset");
  std::uint64_t rho = rng.uniform(1, t);
  std::size_t k = 1;
  for (;;) {
    if (rho <= left_[k]) {
      k = 2 * k;
    } else if (rho <= left_[k] + weights_[k]) {
      return ids_[k];
    } else {
      rho -= left_[k] + weights_[k];
      k = 2 * k + 1;
    }
  }
}

std::size_t PartialSumTree::update(std::uint64_t id, std::uint64_t new_weight) {
  auto it = slot_.find(id);
  if (it == slot_.end()) throw std::out_of_range("partial sum tree: unknown id " + std::to_string(id));
  std::size_t k = it->second;
  weights_[k] = new_weight;
  std::size_t touched = 1;
  for (; k > 1; k /= 2, ++touched) {
    const std::size_t p = k / 2;
    (k % 2 == 0 ? left_[p] : right_[p]) = subtree(k);
  }
  return touched;
}

std::uint64_t PartialSumTree::recompute(std::size_t k, bool& ok) const {
  if (k > entries()) return 0;
  const std::uint64_t l = recompute(2 * k, ok);
  const std::uint64_t r = recompute(2 * k + 1, ok);
  if (l != left_[k] || r != right_[k]) ok = false;
  return l + weights_[k] + r;
}

bool PartialSumTree::audit() const {
  bool ok = true;
  recompute(1, ok);
  return ok;
}

NaiveSampler::NaiveSampler(std::span<const WeightedEntry> entries, std::uint64_t array_limit) {
  std::uint64_t total = 0;
  for (const auto& e : entries) {
    if (e.weight < 0) throw std::invalid_argument("naive sampler: negative weight for id " + std::to_string(e.id));
    total += static_cast<std::uint64_t>(e.weight);
    if (total > array_limit)
      throw std::length_error("naive sampler: total weight above array limit " + std::to_string(array_limit));
  }
  cells_.reserve(total);
  for (const auto& e : entries) cells_.insert(cells_.end(), static_cast<std::size_t>(e.weight), e.id);
}

std::uint64_t NaiveSampler::sample(Rng& rng) const {
  if (cells_.empty()) throw std::logic_error("naive sampler: cannot sample from an empty multiset");
  return cells_[rng.uniform(0, cells_.size() - 1)];
}

std::uint64_t naive_sample(std::span<const WeightedEntry> entries, Rng& rng, std::uint64_t array_limit) {
  return NaiveSampler(entries, array_limit).sample(rng);
}

}  // namespace interleave
