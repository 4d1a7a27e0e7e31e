#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace interleave {

/// 0-based preorder position of a node. The user-facing preorder id is
/// `NodeId + 1`, so the root has id 1.
using NodeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Reserved label of the synthetic root added around a top-level forest.
inline constexpr std::string_view kForestRootLabel = "#root";

/// Recursive, label-carrying description of a tree. Used by the parser and
/// by the structured import format before flattening into a SyntaxTree.
struct TermNode {
  std::string label;
  std::vector<TermNode> children;
};

/// Plane rooted tree of actions stored in preorder.
///
/// Node `k` is the k-th node of the prefix traversal; subtrees occupy
/// contiguous preorder ranges. Each node also remembers its `origin`, the
/// preorder position it had in the tree it was derived from (contraction
/// keeps these so that semantic trees can name source actions).
class SyntaxTree {
public:
  struct Node {
    std::string label;
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
    NodeId origin = kNoNode;
  };

  static SyntaxTree from_term(const TermNode& term);
  /// Builds the tree whose preorder degrees are `degrees` (a Lukasiewicz
  /// word). Labels are assigned by default_label().
  static SyntaxTree from_preorder_degrees(std::span<const std::size_t> degrees);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId v) const { return nodes_[v]; }
  const std::string& label(NodeId v) const { return nodes_[v].label; }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  const std::vector<NodeId>& children(NodeId v) const { return nodes_[v].children; }
  std::size_t degree(NodeId v) const { return nodes_[v].children.size(); }
  NodeId origin(NodeId v) const { return nodes_[v].origin; }
  bool is_leaf(NodeId v) const { return nodes_[v].children.empty(); }

  /// One past the last preorder position of the subtree rooted at v.
  NodeId subtree_end(NodeId v) const;

  std::vector<std::size_t> preorder_degrees() const;

  /// Label lookup; throws std::invalid_argument when absent or ambiguous.
  NodeId find_label(std::string_view label) const;

  TermNode to_term() const;

  /// Same shape and labels. Origins are provenance, not identity.
  friend bool operator==(const SyntaxTree& a, const SyntaxTree& b);

private:
  explicit SyntaxTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}
  std::vector<Node> nodes_;

  friend SyntaxTree contract(const SyntaxTree& t, std::size_t i);
};

/// 'a'..'z' for the first 26 preorder positions, then "n27", "n28", ...
std::string default_label(NodeId v);

/// A syntax tree together with the size of every subtree (its hook weight).
class WeightedTree {
public:
  explicit WeightedTree(SyntaxTree tree);

  const SyntaxTree& tree() const { return tree_; }
  std::size_t size() const { return tree_.size(); }
  std::uint64_t weight(NodeId v) const { return weights_[v]; }
  std::span<const std::uint64_t> weights() const { return weights_; }

private:
  SyntaxTree tree_;
  std::vector<std::uint64_t> weights_;
};

WeightedTree annotate_weights(const SyntaxTree& t);

/// The i-contraction (1-based child index): the i-th child of the root
/// takes the root's place, its own children spliced between its siblings.
SyntaxTree contract(const SyntaxTree& t, std::size_t i);

/// Degree-sequence read along the leftmost semantic branch:
/// u_1 = v_1, u_p = u_{p-1} + v_p - 1 with v the preorder degrees.
/// A single node yields the degenerate sequence (0).
std::vector<std::size_t> degree_sequence_of_tree(const SyntaxTree& t);

/// Inverse of degree_sequence_of_tree; throws InvalidDegreeSequence.
SyntaxTree tree_from_degree_sequence(std::span<const std::size_t> u);

/// Covering pairs (parent, child) of the tree-poset, ordered by child.
std::vector<std::pair<NodeId, NodeId>> tree_to_poset(const SyntaxTree& t);

/// Label-independent canonical form: each node is "(" children... ")".
std::string structural_form(const SyntaxTree& t);

/// Re-parsable term, e.g. "a.b.(c || d.(e || f))". A "#root" forest
/// root is printed as a bare top-level parallel composition.
std::string to_term_string(const SyntaxTree& t);

/// Sequence of action nodes ⟨α_1, …, α_p⟩ (0-based preorder positions).
using RunPrefix = std::vector<NodeId>;

/// Throws InvalidPrefix naming the first action that is not enabled.
void validate_prefix(const SyntaxTree& t, std::span<const NodeId> prefix);

/// Residual structure after consuming a run prefix: the last consumed
/// action and the enabled actions in preorder.
struct SuspendedView {
  RunPrefix prefix;
  NodeId root = kNoNode;
  std::vector<NodeId> frontier;
};

SuspendedView suspended_view(const WeightedTree& t, std::span<const NodeId> prefix);

/// Parses "a,b,d" style prefixes: each item is a label (must be unique in
/// the tree) or "label#id" with a 1-based preorder id.
RunPrefix parse_prefix(const SyntaxTree& t, std::string_view text);

/// "label#id" for a node.
std::string action_name(const SyntaxTree& t, NodeId v);

}  // namespace interleave
