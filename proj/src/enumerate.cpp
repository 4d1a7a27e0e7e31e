#include "interleave/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace interleave {

TreeEnumerator::TreeEnumerator(std::size_t n, std::size_t limit) : n_(n) {
  if (n == 0) throw std::out_of_range("tree size must be at least 1");
  if (n > limit || n > kMaxEnumerationSize)
    throw std::out_of_range("tree size " + std::to_string(n) + " above the enumeration limit " +
                            std::to_string(std::min(limit, kMaxEnumerationSize)));
  // table_[r][s]: fillings of r positions with s open slots that close
  // exactly at the last position.
  table_.assign(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  table_[0][0] = 1;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t s = 1; s <= n + 1; ++s) {
      std::uint64_t total = 0;
      for (std::size_t v = 0; s - 1 + v <= n + 1 && v < r; ++v) total += table_[r - 1][s - 1 + v];
      table_[r][s] = total;
    }
}

std::uint64_t TreeEnumerator::completions(std::size_t remaining, std::size_t open) const {
  if (open >= table_[remaining].size()) return 0;
  return table_[remaining][open];
}

std::vector<std::size_t> TreeEnumerator::unrank(std::uint64_t rank) const {
  if (rank >= count()) throw std::out_of_range("tree rank out of range");
  std::vector<std::size_t> word(n_);
  std::size_t open = 1;
  for (std::size_t pos = 0; pos < n_; ++pos) {
    const std::size_t remaining = n_ - pos;
    for (std::size_t v = 0;; ++v) {
      std::uint64_t c = completions(remaining - 1, open - 1 + v);
      if (rank < c) {
        word[pos] = v;
        open = open - 1 + v;
        break;
      }
      rank -= c;
    }
  }
  return word;
}

bool TreeEnumerator::next(std::vector<std::size_t>& word) const {
  // Open slots before each position.
  std::vector<std::size_t> open(n_ + 1);
  open[0] = 1;
  for (std::size_t pos = 0; pos < n_; ++pos) open[pos + 1] = open[pos] - 1 + word[pos];

  for (std::size_t k = n_; k-- > 0;) {
    const std::size_t remaining = n_ - k;
    for (std::size_t v = word[k] + 1; v < remaining + open[k]; ++v) {
      if (completions(remaining - 1, open[k] - 1 + v) == 0) continue;
      word[k] = v;
      // Smallest completion: take leaves whenever the slots can still close.
      std::size_t slots = open[k] - 1 + v;
      for (std::size_t pos = k + 1; pos < n_; ++pos) {
        const std::size_t rem = n_ - pos;
        std::size_t d = 0;
        while (completions(rem - 1, slots - 1 + d) == 0) ++d;
        word[pos] = d;
        slots = slots - 1 + d;
      }
      return true;
    }
  }
  return false;
}

SyntaxTree TreeEnumerator::tree(std::uint64_t rank) const {
  return SyntaxTree::from_preorder_degrees(unrank(rank));
}

std::vector<SyntaxTree> enumerate_trees(std::size_t n, std::size_t limit) {
  TreeEnumerator e(n, limit);
  std::vector<SyntaxTree> out;
  out.reserve(e.count());
  e.for_each([&out](std::uint64_t, SyntaxTree t) { out.push_back(std::move(t)); });
  return out;
}

}  // namespace interleave
