#include "interleave/syntax_tree.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "interleave/errors.hpp"

namespace interleave {

std::string default_label(NodeId v) {
  if (v < 26) return std::string(1, static_cast<char>('a' + v));
  return "n" + std::to_string(v + 1);
}

SyntaxTree SyntaxTree::from_term(const TermNode& term) {
  std::vector<Node> nodes;
  // Explicit stack: (term, parent). Children pushed in reverse keep preorder.
  std::vector<std::pair<const TermNode*, NodeId>> stack{{&term, kNoNode}};
  while (!stack.empty()) {
    auto [cur, parent] = stack.back();
    stack.pop_back();
    NodeId id = nodes.size();
    nodes.push_back(Node{cur->label, parent, {}, id});
    if (parent != kNoNode) nodes[parent].children.push_back(id);
    for (auto it = cur->children.rbegin(); it != cur->children.rend(); ++it)
      stack.emplace_back(&*it, id);
  }
  return SyntaxTree(std::move(nodes));
}

SyntaxTree SyntaxTree::from_preorder_degrees(std::span<const std::size_t> degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty degree word");
  std::vector<Node> nodes;
  nodes.reserve(degrees.size());
  // Each stack entry is a node that still expects more children.
  std::vector<NodeId> open;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    NodeId parent = kNoNode;
    if (k > 0) {
      if (open.empty()) throw std::invalid_argument("degree word closes before its end");
      parent = open.back();
    }
    nodes.push_back(Node{default_label(k), parent, {}, k});
    if (parent != kNoNode) {
      nodes[parent].children.push_back(k);
      if (nodes[parent].children.size() == degrees[parent]) open.pop_back();
    }
    if (degrees[k] > 0) open.push_back(k);
  }
  if (!open.empty()) throw std::invalid_argument("degree word leaves open slots");
  return SyntaxTree(std::move(nodes));
}

NodeId SyntaxTree::subtree_end(NodeId v) const {
  while (!nodes_[v].children.empty()) v = nodes_[v].children.back();
  return v + 1;
}

std::vector<std::size_t> SyntaxTree::preorder_degrees() const {
  std::vector<std::size_t> d(nodes_.size());
  for (NodeId v = 0; v < nodes_.size(); ++v) d[v] = nodes_[v].children.size();
  return d;
}

NodeId SyntaxTree::find_label(std::string_view label) const {
  NodeId found = kNoNode;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].label != label) continue;
    if (found != kNoNode)
      throw std::invalid_argument("ambiguous action label '" + std::string(label) +
                                  "'; use label#id");
    found = v;
  }
  if (found == kNoNode) throw std::invalid_argument("unknown action '" + std::string(label) + "'");
  return found;
}

TermNode SyntaxTree::to_term() const {
  std::vector<TermNode> built(nodes_.size());
  for (NodeId v = nodes_.size(); v-- > 0;) {
    built[v].label = nodes_[v].label;
    for (NodeId c : nodes_[v].children) built[v].children.push_back(std::move(built[c]));
  }
  return std::move(built[0]);
}

bool operator==(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.size() != b.size()) return false;
  for (NodeId v = 0; v < a.size(); ++v) {
    if (a.nodes_[v].label != b.nodes_[v].label) return false;
    if (a.nodes_[v].children != b.nodes_[v].children) return false;
  }
  return true;
}

WeightedTree::WeightedTree(SyntaxTree tree) : tree_(std::move(tree)), weights_(tree_.size(), 1) {
  // Children follow their parent in preorder, so one backward pass suffices.
  for (NodeId v = tree_.size(); v-- > 1;) weights_[tree_.parent(v)] += weights_[v];
}

WeightedTree annotate_weights(const SyntaxTree& t) { return WeightedTree(t); }

SyntaxTree contract(const SyntaxTree& t, std::size_t i) {
  const auto& roots = t.children(0);
  if (roots.empty()) throw std::invalid_argument("contract: tree is a single leaf");
  if (i < 1 || i > roots.size())
    throw std::out_of_range("contract: child index " + std::to_string(i) + " not in [1, " +
                            std::to_string(roots.size()) + "]");
  const NodeId chosen = roots[i - 1];

  // New preorder: chosen, then the preorder blocks of the new root-children.
  std::vector<NodeId> top;
  top.insert(top.end(), roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(i - 1));
  top.insert(top.end(), t.children(chosen).begin(), t.children(chosen).end());
  top.insert(top.end(), roots.begin() + static_cast<std::ptrdiff_t>(i), roots.end());

  std::vector<NodeId> old_to_new(t.size(), kNoNode);
  std::vector<NodeId> order{chosen};
  for (NodeId r : top) {
    const NodeId end = t.subtree_end(r);
    for (NodeId v = r; v < end; ++v) order.push_back(v);
  }
  for (NodeId k = 0; k < order.size(); ++k) old_to_new[order[k]] = k;

  std::vector<SyntaxTree::Node> nodes(order.size());
  for (NodeId k = 0; k < order.size(); ++k) {
    const auto& src = t.node(order[k]);
    nodes[k].label = src.label;
    nodes[k].origin = src.origin;
    if (k == 0) {
      nodes[k].parent = kNoNode;
      for (NodeId r : top) nodes[k].children.push_back(old_to_new[r]);
    } else {
      NodeId p = src.parent;
      nodes[k].parent = (p == 0 || p == chosen) ? 0 : old_to_new[p];
      for (NodeId c : src.children) nodes[k].children.push_back(old_to_new[c]);
    }
  }
  return SyntaxTree(std::move(nodes));
}

std::vector<std::size_t> degree_sequence_of_tree(const SyntaxTree& t) {
  std::vector<std::size_t> u(t.size());
  std::size_t acc = 0;
  for (NodeId p = 0; p < t.size(); ++p) {
    // u_p = u_{p-1} + v_p - 1 never underflows: the preorder prefix still
    // has open slots until the last node.
    acc = (p == 0) ? t.degree(0) : acc + t.degree(p) - 1;
    u[p] = acc;
  }
  return u;
}

SyntaxTree tree_from_degree_sequence(std::span<const std::size_t> u) {
  const std::size_t n = u.size();
  if (n == 0) throw InvalidDegreeSequence(0, "empty sequence");
  if (n == 1) {
    if (u[0] != 0) throw InvalidDegreeSequence(0, "a single-term sequence must be (0)");
    return SyntaxTree::from_preorder_degrees(std::vector<std::size_t>{0});
  }
  if (u[0] == 0) throw InvalidDegreeSequence(0, "u_1 must be positive");
  std::vector<std::size_t> v(n);
  v[0] = u[0];
  for (std::size_t p = 1; p < n; ++p) {
    if (u[p] + 1 < u[p - 1]) throw InvalidDegreeSequence(p, "u_p < u_{p-1} - 1");
    if (u[p] == 0 && p + 1 < n) throw InvalidDegreeSequence(p, "sequence reaches 0 before its end");
    v[p] = u[p] + 1 - u[p - 1];
  }
  if (u[n - 1] != 0) throw InvalidDegreeSequence(n - 1, "last term must be 0");
  return SyntaxTree::from_preorder_degrees(v);
}

std::vector<std::pair<NodeId, NodeId>> tree_to_poset(const SyntaxTree& t) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(t.size() ? t.size() - 1 : 0);
  for (NodeId v = 1; v < t.size(); ++v) pairs.emplace_back(t.parent(v), v);
  return pairs;
}

std::string structural_form(const SyntaxTree& t) {
  std::string out;
  out.reserve(2 * t.size());
  const WeightedTree sizes(t);
  // Preorder walk; close parentheses when leaving subtrees.
  std::vector<NodeId> ends;
  for (NodeId v = 0; v < t.size(); ++v) {
    while (!ends.empty() && ends.back() <= v) {
      out.push_back(')');
      ends.pop_back();
    }
    out.push_back('(');
    ends.push_back(v + sizes.weight(v));
  }
  out.append(ends.size(), ')');
  return out;
}

namespace {

void write_term(const SyntaxTree& t, NodeId v, std::string& out) {
  out += t.label(v);
  const auto& cs = t.children(v);
  if (cs.empty()) return;
  out += '.';
  if (cs.size() == 1) {
    write_term(t, cs[0], out);
    return;
  }
  out += '(';
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k) out += " || ";
    write_term(t, cs[k], out);
  }
  out += ')';
}

}  // namespace

std::string to_term_string(const SyntaxTree& t) {
  std::string out;
  if (t.label(0) == kForestRootLabel && t.degree(0) > 0) {
    const auto& cs = t.children(0);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k) out += " || ";
      write_term(t, cs[k], out);
    }
    return out;
  }
  write_term(t, 0, out);
  return out;
}

void validate_prefix(const SyntaxTree& t, std::span<const NodeId> prefix) {
  if (prefix.empty()) throw InvalidPrefix(0, "empty prefix");
  if (prefix.size() > t.size()) throw InvalidPrefix(t.size(), "longer than the tree");
  std::vector<bool> seen(t.size(), false);
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    NodeId a = prefix[k];
    if (a >= t.size()) throw InvalidPrefix(k, "no node with preorder id " + std::to_string(a + 1));
    if (seen[a]) throw InvalidPrefix(k, "action " + action_name(t, a) + " repeated");
    if (k == 0 ? a != 0 : !seen[t.parent(a)])
      throw InvalidPrefix(k, "action " + action_name(t, a) + " is not enabled");
    seen[a] = true;
  }
}

SuspendedView suspended_view(const WeightedTree& wt, std::span<const NodeId> prefix) {
  const SyntaxTree& t = wt.tree();
  validate_prefix(t, prefix);
  std::vector<bool> consumed(t.size(), false);
  for (NodeId a : prefix) consumed[a] = true;
  SuspendedView view;
  view.prefix.assign(prefix.begin(), prefix.end());
  view.root = prefix.back();
  for (NodeId a : prefix)
    for (NodeId c : t.children(a))
      if (!consumed[c]) view.frontier.push_back(c);
  std::sort(view.frontier.begin(), view.frontier.end());
  return view;
}

RunPrefix parse_prefix(const SyntaxTree& t, std::string_view text) {
  RunPrefix out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw std::invalid_argument("empty action in prefix list");
    std::size_t hash = item.rfind('#');
    if (hash != std::string_view::npos && hash > 0) {
      std::size_t id = 0;
      std::string_view digits = item.substr(hash + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || id == 0 || id > t.size())
        throw std::invalid_argument("bad action reference '" + std::string(item) + "'");
      if (t.label(id - 1) != item.substr(0, hash))
        throw std::invalid_argument("action reference '" + std::string(item) +
                                    "' does not match the label at that id");
      out.push_back(id - 1);
    } else {
      out.push_back(t.find_label(item));
    }
    pos = comma + 1;
  }
  return out;
}

std::string action_name(const SyntaxTree& t, NodeId v) {
  return t.label(v) + "#" + std::to_string(v + 1);
}

}  // namespace interleave
