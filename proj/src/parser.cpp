#include "interleave/parser.hpp"

#include <cctype>

#include "interleave/errors.hpp"

namespace interleave {
namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermNode process(bool allow_forest) {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty input");
    TermNode first = prefixed();
    skip_ws();
    if (peek_parallel()) {
      if (!allow_forest)
        throw ParseError(pos_, "top-level parallel composition; wrap it under a prefix action");
      TermNode root{std::string(kForestRootLabel), {}};
      root.children.push_back(std::move(first));
      while (peek_parallel()) {
        pos_ += 2;
        root.children.push_back(prefixed());
        skip_ws();
      }
      first = std::move(root);
    }
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return first;
  }

private:
  TermNode prefixed() {
    TermNode node{action(), {}};
    skip_ws();
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      skip_ws();
      if (!at_end() && text_[pos_] == '(') {
        ++pos_;
        parallel(node.children);
        skip_ws();
        if (at_end() || text_[pos_] != ')') throw ParseError(pos_, "expected ')'");
        ++pos_;
      } else {
        node.children.push_back(prefixed());
      }
    }
    return node;
  }

  void parallel(std::vector<TermNode>& out) {
    out.push_back(prefixed());
    skip_ws();
    while (peek_parallel()) {
      pos_ += 2;
      out.push_back(prefixed());
      skip_ws();
    }
  }

  std::string action() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected an action name, found end of input");
    const std::size_t start = pos_;
    char c = text_[pos_];
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      throw ParseError(pos_, std::string("expected an action name, found '") + c + "'");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_parallel() const {
    return pos_ + 1 < text_.size() && text_[pos_] == '|' && text_[pos_ + 1] == '|';
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxTree parse_process(std::string_view text, bool allow_forest) {
  Parser p(text);
  return SyntaxTree::from_term(p.process(allow_forest));
}

}  // namespace interleave
