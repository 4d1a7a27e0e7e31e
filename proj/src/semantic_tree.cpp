#include "interleave/semantic_tree.hpp"

#include <algorithm>
#include <sstream>

#include "interleave/cuts_profiles.hpp"
#include "interleave/errors.hpp"

namespace interleave {

std::vector<std::uint64_t> SemanticTree::level_counts() const {
  std::vector<std::uint64_t> counts(height() + 1, 0);
  for (const auto& n : nodes_) ++counts[n.depth];
  return counts;
}

std::size_t SemanticTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.children.empty(); }));
}

std::size_t SemanticTree::height() const {
  std::size_t h = 0;
  for (const auto& n : nodes_) h = std::max(h, n.depth);
  return h;
}

std::vector<RunPrefix> SemanticTree::branches() const {
  std::vector<RunPrefix> out;
  RunPrefix path;
  // Preorder storage: a node's depth tells how much of the path to keep.
  for (const auto& n : nodes_) {
    path.resize(n.depth);
    path.push_back(n.action);
    if (n.children.empty()) out.push_back(path);
  }
  return out;
}

namespace {

void expand(const SyntaxTree& t, std::size_t depth, std::vector<SemanticTree::Node>& out) {
  const std::size_t self = out.size();
  out.push_back(SemanticTree::Node{t.origin(0), t.label(0), depth, {}});
  for (std::size_t i = 1; i <= t.degree(0); ++i) {
    out[self].children.push_back(out.size());
    expand(contract(t, i), depth + 1, out);
  }
}

}  // namespace

SemanticTree build_semantic_tree(const SyntaxTree& t, std::uint64_t node_budget) {
  const BigInt predicted = semantic_size(t);
  if (predicted > BigInt(static_cast<unsigned long>(node_budget)))
    throw BudgetExceeded("semantic tree exceeds node budget " + std::to_string(node_budget),
                         predicted);
  SemanticTree s;
  s.nodes_.reserve(predicted.get_ui());
  expand(t, 0, s.nodes_);
  return s;
}

std::string to_dot(const SemanticTree& s) {
  std::ostringstream out;
  out << "digraph semantic {\n";
  for (std::size_t k = 0; k < s.size(); ++k)
    out << "  " << k + 1 << " [label=\"" << s.node(k).label << "\"];\n";
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t c : s.node(k).children) out << "  " << k + 1 << " -> " << c + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace interleave
