#pragma once

#include <string>
#include <string_view>

#include "interleave/syntax_tree.hpp"

namespace interleave {

/// Nested record {"label": string, "children": [ ... ]}.
std::string to_json(const SyntaxTree& t, int indent = -1);

/// Inverse of to_json. Labels must be identifiers; "#root" is accepted at
/// the root only. Throws std::invalid_argument on malformed input.
SyntaxTree syntax_tree_from_json(std::string_view text);

/// DOT digraph; node names are preorder ids, display labels are actions.
std::string to_dot(const SyntaxTree& t);

/// Reads a tree from text: JSON when it starts with '{', otherwise a term.
SyntaxTree read_tree(std::string_view text, bool allow_forest = false);

}  // namespace interleave
