#include "interleave/tree_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "interleave/parser.hpp"
#include "json.hpp"

namespace interleave {
namespace {

using nlohmann::json;

json node_json(const SyntaxTree& t, NodeId v) {
  json children = json::array();
  for (NodeId c : t.children(v)) children.push_back(node_json(t, c));
  return json{{"label", t.label(v)}, {"children", std::move(children)}};
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

TermNode term_from_json(const json& j, bool is_root) {
  if (!j.is_object() || !j.contains("label") || !j["label"].is_string())
    throw std::invalid_argument("tree node must be an object with a string \"label\"");
  TermNode node{j["label"].get<std::string>(), {}};
  if (!is_identifier(node.label) && !(is_root && node.label == kForestRootLabel))
    throw std::invalid_argument("invalid action label '" + node.label + "'");
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw std::invalid_argument("\"children\" must be an array");
    for (const auto& c : j["children"]) node.children.push_back(term_from_json(c, false));
  }
  return node;
}

}  // namespace

std::string to_json(const SyntaxTree& t, int indent) { return node_json(t, 0).dump(indent); }

SyntaxTree syntax_tree_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON tree: ") + e.what());
  }
  return SyntaxTree::from_term(term_from_json(j, true));
}

std::string to_dot(const SyntaxTree& t) {
  std::ostringstream out;
  out << "digraph syntax {\n";
  for (NodeId v = 0; v < t.size(); ++v)
    out << "  " << v + 1 << " [label=\"" << t.label(v) << "\"];\n";
  for (NodeId v = 1; v < t.size(); ++v) out << "  " << t.parent(v) + 1 << " -> " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

SyntaxTree read_tree(std::string_view text, bool allow_forest) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '{') return syntax_tree_from_json(text);
  return parse_process(text, allow_forest);
}

}  // namespace interleave
