#pragma once

#include <string_view>

#include "interleave/syntax_tree.hpp"

namespace interleave {

// Grammar (whitespace is insignificant):
//
//   process   = prefixed ;
//   prefixed  = action [ "." tail ] ;
//   tail      = prefixed | "(" parallel ")" ;
//   parallel  = prefixed { "||" prefixed } ;
//   action    = [A-Za-z_][A-Za-z0-9_]* ;
//
// With `allow_forest`, a top-level `parallel` is also accepted and placed
// under a synthetic "#root" node.
//
// Throws ParseError carrying the offending character offset.
SyntaxTree parse_process(std::string_view text, bool allow_forest = false);

}  // namespace interleave
