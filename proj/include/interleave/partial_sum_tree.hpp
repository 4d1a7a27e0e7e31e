#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "interleave/rng.hpp"

namespace interleave {

struct WeightedEntry {
  std::uint64_t id = 0;
  std::int64_t weight = 0;
};

/// Weighted multiset with O(log n) sampling and update.
///
/// Entries sit in a complete binary tree laid out as a heap array (slot 1 is
/// the root, slot k has children 2k and 2k+1) in the order they were given.
/// Every slot caches the total weight of its left and right subtrees.
class PartialSumTree {
public:
  PartialSumTree() = default;
  /// Throws std::invalid_argument on a duplicate id or a negative weight.
  explicit PartialSumTree(std::span<const WeightedEntry> entries);

  std::size_t entries() const { return ids_.size() - 1; }
  std::uint64_t total() const { return entries() == 0 ? 0 : subtree(1); }
  /// Number of levels: floor(log2(entries)) + 1, 0 when empty.
  std::size_t depth() const;

  bool contains(std::uint64_t id) const { return slot_.contains(id); }
  std::uint64_t weight(std::uint64_t id) const;

  /// Returns id with probability weight(id)/total(). Throws std::logic_error
  /// when the total is 0.
  std::uint64_t sample(Rng& rng) const;

  /// Sets the weight of an existing id and repairs the cached sums on the
  /// way to the root. Returns the number of slots touched.
  std::size_t update(std::uint64_t id, std::uint64_t new_weight);

  /// Recomputes every cached sum; true when all match.
  bool audit() const;

  /// Left/right cached sums and entry of a slot (1-based), for inspection.
  std::uint64_t left_sum(std::size_t slot) const { return left_[slot]; }
  std::uint64_t right_sum(std::size_t slot) const { return right_[slot]; }
  std::uint64_t slot_id(std::size_t slot) const { return ids_[slot]; }
  std::uint64_t slot_weight(std::size_t slot) const { return weights_[slot]; }

private:
  std::uint64_t subtree(std::size_t k) const { return left_[k] + weights_[k] + right_[k]; }
  std::uint64_t recompute(std::size_t k, bool& ok) const;

  // Slot 0 is unused so that the heap arithmetic stays 1-based.
  std::vector<std::uint64_t> ids_{0};
  std::vector<std::uint64_t> weights_{0};
  std::vector<std::uint64_t> left_{0};
  std::vector<std::uint64_t> right_{0};
  std::unordered_map<std::uint64_t, std::size_t> slot_;
};

inline constexpr std::uint64_t kNaiveArrayLimit = std::uint64_t{1} << 24;

/// Flat-array sampler: each id is repeated weight times and a position is
/// drawn uniformly. Differential-testing oracle for PartialSumTree.
class NaiveSampler {
public:
  /// Throws std::invalid_argument on negative weights and std::length_error
  /// when the total weight exceeds `array_limit`.
  explicit NaiveSampler(std::span<const WeightedEntry> entries, std::uint64_t array_limit = kNaiveArrayLimit);

  std::uint64_t total() const { return cells_.size(); }
  std::uint64_t sample(Rng& rng) const;

private:
  std::vector<std::uint64_t> cells_;
};

std::uint64_t naive_sample(std::span<const WeightedEntry> entries, Rng& rng,
                           std::uint64_t array_limit = kNaiveArrayLimit);

}  // namespace interleave
