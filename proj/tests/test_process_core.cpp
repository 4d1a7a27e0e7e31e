#include <set>

#include "doctest.h"
#include "interleave/enumerate.hpp"
#include "interleave/errors.hpp"
#include "interleave/exact_counts.hpp"
#include "interleave/parser.hpp"
#include "interleave/semantic_tree.hpp"
#include "interleave/tree_io.hpp"
#include "oracles.hpp"

using namespace interleave;

namespace {
const char* const kFigureOne = "a.b.(c || d.(e || f))";

std::vector<std::string> labels(const SyntaxTree& t) {
  std::vector<std::string> out;
  for (NodeId v = 0; v < t.size(); ++v) out.push_back(t.label(v));
  return out;
}
}  // namespace

TEST_CASE("parser builds the preorder tree") {
  const SyntaxTree t = parse_process(kFigureOne);
  CHECK(t.size() == 6);
  CHECK(labels(t) == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  CHECK(t.children(1) == std::vector<NodeId>{2, 3});
  CHECK(t.children(3) == std::vector<NodeId>{4, 5});
  CHECK(t.parent(5) == 3);
  CHECK(parse_process("a").size() == 1);
  CHECK(parse_process("  a . b\n.( c||d )") == parse_process("a.b.(c || d)"));
  CHECK(parse_process("x_1.Y2") .label(1) == "Y2");
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_process("a || b"), ParseError);
  CHECK_THROWS_AS(parse_process(""), ParseError);
  CHECK_THROWS_AS(parse_process("   "), ParseError);
  CHECK_THROWS_AS(parse_process("a.(b"), ParseError);
  CHECK_THROWS_AS(parse_process("a.b c"), ParseError);
  CHECK_THROWS_AS(parse_process("#root.a"), ParseError);
  CHECK_THROWS_AS(parse_process("1a"), ParseError);
  try {
    parse_process("a.(b || )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("forest input gets a synthetic root") {
  const SyntaxTree t = parse_process("a || b.c", true);
  CHECK(t.label(0) == kForestRootLabel);
  CHECK(t.size() == 4);
  CHECK(t.degree(0) == 2);
  CHECK(to_term_string(t) == "a || b.c");
  CHECK(parse_process(to_term_string(t), true) == t);
  // A prefixed process is not wrapped even when forests are allowed.
  CHECK(parse_process("a.b", true).label(0) == "a");
}

TEST_CASE("term string and JSON round trips") {
  const SyntaxTree t = parse_process(kFigureOne);
  CHECK(to_term_string(t) == kFigureOne);
  CHECK(parse_process(to_term_string(t)) == t);
  CHECK(syntax_tree_from_json(to_json(t)) == t);
  CHECK(read_tree(to_json(t, 2)) == t);
  CHECK(read_tree(kFigureOne) == t);
  CHECK_THROWS_AS(syntax_tree_from_json(R"({"label": "a b", "children": []})"), std::invalid_argument);
  CHECK_THROWS_AS(syntax_tree_from_json(R"({"label": "a", "children": [{"label": "#root", "children": []}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(syntax_tree_from_json("{"), std::invalid_argument);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const SyntaxTree& u : enumerate_trees(n)) CHECK(parse_process(to_term_string(u)) == u);
}

TEST_CASE("dot export names nodes by preorder id") {
  const std::string dot = to_dot(parse_process("a.(b || c)"));
  CHECK(dot.find("1 [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("1 -> 3") != std::string::npos);
}

TEST_CASE("weights are subtree sizes") {
  const WeightedTree w(parse_process(kFigureOne));
  CHECK(std::vector<std::uint64_t>(w.weights().begin(), w.weights().end()) ==
        std::vector<std::uint64_t>{6, 5, 1, 3, 1, 1});
  CHECK(annotate_weights(parse_process("a")).weight(0) == 1);
  const WeightedTree path(parse_process("a.b.c.d"));
  CHECK(std::vector<std::uint64_t>(path.weights().begin(), path.weights().end()) ==
        std::vector<std::uint64_t>{4, 3, 2, 1});
}

TEST_CASE("contraction") {
  const SyntaxTree t = parse_process("a.(b || c.(e || f) || d)");
  const SyntaxTree c2 = contract(t, 2);
  CHECK(c2 == parse_process("c.(b || e || f || d)"));
  CHECK(c2.origin(0) == 2);
  CHECK(contract(parse_process("a.b"), 1) == parse_process("b"));
  const SyntaxTree fig = contract(parse_process(kFigureOne), 1);
  CHECK(fig == parse_process("b.(c || d.(e || f))"));
  CHECK_THROWS_AS(contract(t, 0), std::out_of_range);
  CHECK_THROWS_AS(contract(t, 4), std::out_of_range);
  CHECK_THROWS_AS(contract(parse_process("a"), 1), std::invalid_argument);
}

TEST_CASE("contraction removes exactly one node") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const SyntaxTree& t : enumerate_trees(n))
      for (std::size_t i = 1; i <= t.degree(0); ++i) {
        const SyntaxTree c = contract(t, i);
        CHECK(c.size() == n - 1);
        CHECK(c.origin(0) == t.children(0)[i - 1]);
      }
}

TEST_CASE("semantic tree of the running example") {
  const SemanticTree s = build_semantic_tree(parse_process(kFigureOne));
  CHECK(s.size() == 24);
  CHECK(s.level_counts() == std::vector<std::uint64_t>{1, 1, 2, 4, 8, 8});
  CHECK(s.leaf_count() == 8);
  CHECK(build_semantic_tree(parse_process("a")).size() == 1);
  CHECK(build_semantic_tree(parse_process("a.(b || c || d)")).leaf_count() == 6);
}

TEST_CASE("semantic tree budget") {
  const SyntaxTree star = parse_process("a.(b || c || d || e || f || g || h)");
  try {
    build_semantic_tree(star, 100);
    FAIL("expected the budget to be exceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.predicted() == oracle::semantic_size(star));
  }
  CHECK(build_semantic_tree(star, 13700).size() == 13700);
}

TEST_CASE("semantic trees are balanced, widen downward and list every run once") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const SyntaxTree& t : enumerate_trees(n)) {
      const SemanticTree s = build_semantic_tree(t);
      const auto levels = s.level_counts();
      CHECK(levels.size() == n);
      CHECK(std::is_sorted(levels.begin(), levels.end()));
      for (std::size_t k = 0; k < s.size(); ++k)
        if (s.node(k).children.empty()) CHECK(s.node(k).depth == n - 1);
      CHECK(BigInt(static_cast<unsigned long>(s.leaf_count())) == hook_count(WeightedTree(t)));

      auto branches = s.branches();
      auto runs = oracle::all_runs(t);
      std::sort(branches.begin(), branches.end());
      CHECK(branches == runs);
    }
}

TEST_CASE("branch sets determine the tree") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::vector<RunPrefix>> seen;
    for (const SyntaxTree& t : enumerate_trees(n)) {
      auto b = build_semantic_tree(t).branches();
      std::sort(b.begin(), b.end());
      CHECK(seen.insert(b).second);
    }
  }
}

TEST_CASE("degree sequences") {
  const SyntaxTree fig = parse_process(kFigureOne);
  CHECK(degree_sequence_of_tree(fig) == std::vector<std::size_t>{1, 2, 1, 2, 1, 0});
  CHECK(degree_sequence_of_tree(parse_process("a")) == std::vector<std::size_t>{0});
  CHECK(degree_sequence_of_tree(parse_process("a.b.c")) == std::vector<std::size_t>{1, 1, 0});
  const std::vector<std::size_t> u{1, 2, 1, 2, 1, 0};
  CHECK(structural_form(tree_from_degree_sequence(u)) == structural_form(fig));
  CHECK(structural_form(tree_from_degree_sequence(std::vector<std::size_t>{1, 1, 0})) == "((()))");
  CHECK(tree_from_degree_sequence(std::vector<std::size_t>{2, 1, 1, 0}).preorder_degrees() ==
        std::vector<std::size_t>{2, 0, 1, 0});
}

TEST_CASE("degree sequence of a tree is its leftmost semantic branch") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const SyntaxTree& t : enumerate_trees(n)) {
      const SemanticTree s = build_semantic_tree(t);
      std::vector<std::size_t> u;
      for (std::size_t k = 0; u.size() < n; k = s.node(k).children.empty() ? k : s.node(k).children.front())
        u.push_back(s.node(k).children.size());
      CHECK(degree_sequence_of_tree(t) == u);
    }
}

TEST_CASE("invalid degree sequences report the index") {
  auto index_of = [](std::vector<std::size_t> u) -> long {
    try {
      tree_from_degree_sequence(u);
    } catch (const InvalidDegreeSequence& e) {
      return static_cast<long>(e.index());
    }
    return -1;
  };
  CHECK(index_of({0, 0}) == 0);
  CHECK(index_of({1, 0, 0}) == 1);
  CHECK(index_of({2, 0, 1, 0}) == 1);
  CHECK(index_of({1, 1, 1}) == 2);
  CHECK(index_of({}) == 0);
}

TEST_CASE("degree-sequence validity agrees with brute force at n = 4") {
  std::set<std::vector<std::size_t>> valid;
  for (const SyntaxTree& t : enumerate_trees(4)) valid.insert(degree_sequence_of_tree(t));
  std::size_t accepted = 0;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t d = 0; d < 5; ++d) {
          const std::vector<std::size_t> u{a, b, c, d};
          bool ok = true;
          try {
            const SyntaxTree t = tree_from_degree_sequence(u);
            CHECK(degree_sequence_of_tree(t) == u);
          } catch (const InvalidDegreeSequence&) {
            ok = false;
          }
          CHECK(ok == valid.contains(u));
          accepted += ok;
        }
  CHECK(accepted == 5);
}

TEST_CASE("degree-sequence round trip") {
  for (std::size_t n = 1; n <= 10; ++n)
    TreeEnumerator(n).for_each([](std::uint64_t, const SyntaxTree& t) {
      CHECK(tree_from_degree_sequence(degree_sequence_of_tree(t)) == t);
    });
}

TEST_CASE("enumeration matches an independent generator") {
  const auto catalan = oracle::catalan(10);
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(3).size() == 2);
  CHECK(enumerate_trees(6).size() == 42);
  for (std::size_t n = 1; n <= 10; ++n) {
    const TreeEnumerator e(n);
    CHECK(BigInt(static_cast<unsigned long>(e.count())) == catalan[n]);
    std::vector<std::string> forms;
    std::vector<std::vector<std::size_t>> words;
    e.for_each([&](std::uint64_t r, const SyntaxTree& t) {
      forms.push_back(structural_form(t));
      words.push_back(t.preorder_degrees());
      CHECK(e.unrank(r) == words.back());
    });
    CHECK(std::is_sorted(words.begin(), words.end()));
    auto expected = oracle::tree_shapes(n);
    std::sort(forms.begin(), forms.end());
    std::sort(expected.begin(), expected.end());
    CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
    CHECK(forms == expected);
  }
}

TEST_CASE("enumeration ranges split and rejoin") {
  const TreeEnumerator e(8);
  std::vector<std::uint64_t> seen;
  for (std::uint64_t b = 0; b < e.count(); b += 100)
    e.for_each([&](std::uint64_t r, const SyntaxTree&) { seen.push_back(r); }, b, std::min(b + 100, e.count()));
  CHECK(seen.size() == e.count());
  for (std::uint64_t r = 0; r < seen.size(); ++r) CHECK(seen[r] == r);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(TreeEnumerator(0), std::out_of_range);
  CHECK_THROWS_AS(TreeEnumerator(13), std::out_of_range);
  CHECK_NOTHROW(TreeEnumerator(13, 13));
  CHECK_THROWS_AS(TreeEnumerator(31, 40), std::out_of_range);
  CHECK_THROWS_AS(TreeEnumerator(5).unrank(14), std::out_of_range);
}

TEST_CASE("suspended view") {
  const WeightedTree w(parse_process(kFigureOne));
  const SuspendedView v = suspended_view(w, RunPrefix{0, 1, 3});
  CHECK(v.root == 3);
  CHECK(v.frontier == std::vector<NodeId>{2, 4, 5});
  CHECK(suspended_view(w, RunPrefix{0}).frontier == std::vector<NodeId>{1});
  CHECK(suspended_view(w, RunPrefix{0, 1, 2, 3, 4, 5}).frontier.empty());
  try {
    suspended_view(w, RunPrefix{0, 3});
    FAIL("expected an invalid prefix");
  } catch (const InvalidPrefix& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(suspended_view(w, RunPrefix{1}), InvalidPrefix);
  CHECK_THROWS_AS(suspended_view(w, RunPrefix{0, 1, 1}), InvalidPrefix);
  CHECK_THROWS_AS(suspended_view(w, RunPrefix{}), InvalidPrefix);
}

TEST_CASE("frontier size is the semantic branching degree") {
  const SyntaxTree t = parse_process("a.(b.(c || d) || e.f || g)");
  const WeightedTree w(t);
  const SemanticTree s = build_semantic_tree(t);
  RunPrefix path;
  for (std::size_t k = 0; k < s.size(); ++k) {
    path.resize(s.node(k).depth);
    path.push_back(s.node(k).action);
    CHECK(suspended_view(w, path).frontier.size() == s.node(k).children.size());
  }
}

TEST_CASE("prefix parsing") {
  const SyntaxTree t = parse_process("a.(b.c || b.d)");
  CHECK(parse_prefix(t, "a, b#2, c") == RunPrefix{0, 1, 2});
  CHECK(parse_prefix(t, "a,b#4") == RunPrefix{0, 3});
  CHECK_THROWS_AS(parse_prefix(t, "a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prefix(t, "a,z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prefix(t, "a,c#2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prefix(t, "a,,c"), std::invalid_argument);
  CHECK(action_name(t, 3) == "b#4");
}

TEST_CASE("tree poset") {
  const SyntaxTree t = parse_process(kFigureOne);
  const std::vector<std::pair<NodeId, NodeId>> expected{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}};
  CHECK(tree_to_poset(t) == expected);
  CHECK(tree_to_poset(parse_process("a")).empty());
  CHECK(tree_to_poset(parse_process("a.b.c")) == std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}});
}

TEST_CASE("structural form ignores labels") {
  CHECK(structural_form(parse_process("x.(y || z)")) == "(()())");
  CHECK(structural_form(parse_process("a")) == "()");
  CHECK(!(parse_process("x.(y || z)") == parse_process("a.(b || c)")));
}

TEST_CASE("label lookup") {
  const SyntaxTree t = parse_process("a.(b || b)");
  CHECK(t.find_label("a") == 0);
  CHECK_THROWS_AS(t.find_label("b"), std::invalid_argument);
  CHECK_THROWS_AS(t.find_label("q"), std::invalid_argument);
}
