#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "interleave/syntax_tree.hpp"

namespace interleave {

inline constexpr std::size_t kDefaultEnumerationLimit = 12;
/// Hard ceiling so that tree counts and ranks fit in 64 bits.
inline constexpr std::size_t kMaxEnumerationSize = 30;

/// Exhaustive enumeration of the plane trees of one size, in lexicographic
/// order of their preorder degree words (Lukasiewicz words).
///
/// Trees can be addressed by rank, so sweeps can be split into index ranges
/// that are processed independently and merged in rank order.
class TreeEnumerator {
public:
  explicit TreeEnumerator(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

  std::size_t size() const { return n_; }
  /// Number of plane trees of size n.
  std::uint64_t count() const { return completions(n_, 1); }

  std::vector<std::size_t> unrank(std::uint64_t rank) const;
  /// Advances `word` to its lexicographic successor; false past the last.
  bool next(std::vector<std::size_t>& word) const;

  SyntaxTree tree(std::uint64_t rank) const;

  /// Calls f(rank, tree) for every rank in [begin, end).
  template <class F>
  void for_each(F&& f, std::uint64_t begin, std::uint64_t end) const {
    if (begin >= end) return;
    std::vector<std::size_t> word = unrank(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      f(r, SyntaxTree::from_preorder_degrees(word));
      if (r + 1 < end) next(word);
    }
  }
  template <class F>
  void for_each(F&& f) const {
    for_each(std::forward<F>(f), 0, count());
  }

private:
  // Ways to fill `remaining` positions starting with `open` pending slots.
  std::uint64_t completions(std::size_t remaining, std::size_t open) const;

  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> table_;
};

/// All plane trees of size n in canonical order. Throws std::out_of_range
/// when n is 0 or above `limit`.
std::vector<SyntaxTree> enumerate_trees(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace interleave
