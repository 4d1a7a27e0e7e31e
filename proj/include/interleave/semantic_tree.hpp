#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "interleave/numeric.hpp"
#include "interleave/syntax_tree.hpp"

namespace interleave {

inline constexpr std::uint64_t kDefaultSemanticBudget = 1'000'000;

/// Explicit interleaving tree Shuf(T). Verification oracle only: its size
/// grows factorially with the source tree.
///
/// Nodes are stored in preorder; each carries the source action it
/// executes (a preorder position in the source tree) and its depth.
class SemanticTree {
public:
  struct Node {
    NodeId action = kNoNode;
    std::string label;
    std::size_t depth = 0;
    std::vector<std::size_t> children;
  };

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t k) const { return nodes_[k]; }

  /// Node count per depth, root first.
  std::vector<std::uint64_t> level_counts() const;
  std::size_t leaf_count() const;
  std::size_t height() const;
  /// Every root-to-leaf branch as a sequence of source actions, left to right.
  std::vector<RunPrefix> branches() const;

private:
  std::vector<Node> nodes_;
  friend SemanticTree build_semantic_tree(const SyntaxTree&, std::uint64_t);
};

/// Expands Shuf(t) by repeated contraction. Throws BudgetExceeded (with the
/// exact predicted node count) when that count exceeds `node_budget`.
SemanticTree build_semantic_tree(const SyntaxTree& t,
                                 std::uint64_t node_budget = kDefaultSemanticBudget);

std::string to_dot(const SemanticTree& s);

}  // namespace interleave
