#include "interleave/selfcheck.hpp"

#include <functional>
#include <sstream>

#include "interleave/cuts_profiles.hpp"
#include "interleave/enumerate.hpp"
#include "interleave/exact_counts.hpp"
#include "interleave/parser.hpp"
#include "interleave/partial_sum_tree.hpp"
#include "interleave/run_sampling.hpp"
#include "interleave/semantic_tree.hpp"
#include "interleave/sweeps.hpp"

namespace interleave {
namespace {

using Check = std::function<std::string()>;  // empty string means pass

std::string each_tree(std::size_t max_n, const std::function<std::string(const SyntaxTree&)>& f) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::string failure;
    TreeEnumerator(n).for_each([&](std::uint64_t, const SyntaxTree& t) {
      if (failure.empty()) {
        std::string msg = f(t);
        if (!msg.empty()) failure = msg + " for " + to_term_string(t);
      }
    });
    if (!failure.empty()) return failure;
  }
  return {};
}

std::string figure_one() {
  const WeightedTree t(parse_process("a.b.(c || d.(e || f))"));
  const LevelProfile p = level_profile(t.tree());
  const std::vector<BigInt> expected{1, 1, 2, 4, 8, 8};
  if (hook_count(t) != 8) return "run count is not 8";
  if (p.counts != expected) return "profile differs from 1,1,2,4,8,8";
  if (semantic_size(t.tree()) != 24) return "semantic size is not 24";
  const RunPrefix abd{0, 1, 3};
  if (prefix_probability(t, abd) != Rational(3, 4)) return "P(a,b,d) is not 3/4";
  if (suspended_view(t, abd).frontier != std::vector<NodeId>{2, 4, 5}) return "frontier of a,b,d is not c,e,f";
  return {};
}

std::string runs_and_profiles() {
  return each_tree(6, [](const SyntaxTree& t) -> std::string {
    const WeightedTree w(t);
    const SemanticTree s = build_semantic_tree(t);
    const BigInt runs = hook_count(w);
    if (count_runs_via_probability(w) != runs || BigInt(static_cast<unsigned long>(s.leaf_count())) != runs)
      return "run counts disagree";
    const LevelProfile fast = level_profile(t, ProfileMethod::fast);
    const LevelProfile oracle = level_profile(t, ProfileMethod::oracle);
    if (fast.counts != oracle.counts) return "fast and oracle profiles disagree";
    const auto levels = s.level_counts();
    for (std::size_t l = 0; l < levels.size(); ++l)
      if (fast.counts[l] != static_cast<unsigned long>(levels[l])) return "profile differs from the semantic tree";
    return {};
  });
}

std::string sweep_identities() {
  for (std::size_t n = 1; n <= 8; ++n) {
    const SweepTotals s = sweep_trees(n);
    const BigInt c = catalan(n);
    if (s.run_sum != increasing_count(n)) return "run sum differs at n = " + std::to_string(n);
    if (Rational(s.semantic_sum) != mean_size(n, SizeMethod::exact_sum) * c)
      return "semantic size sum differs at n = " + std::to_string(n);
    for (std::size_t i = 0; i < n; ++i)
      if (Rational(s.level_sums[n - 1 - i]) != mean_level_width(n, i) * c)
        return "level sum differs at n = " + std::to_string(n) + ", i = " + std::to_string(i);
  }
  return {};
}

std::string recurrences() {
  const std::vector<Rational> s = mean_size_sequence(30);
  const std::vector<Rational> r = r_sequence(30);
  for (std::size_t n = 1; n <= 30; ++n) {
    if (s[n] != mean_size(n, SizeMethod::exact_sum)) return "mean size recurrence fails at n = " + std::to_string(n);
    Rational expected = s[n] * pow2(n - 1) / factorial(n);
    expected.canonicalize();
    if (r[n] != expected) return "R recurrence fails at n = " + std::to_string(n);
  }
  if (cut_count_sequence(9, CutCountMethod::brute) != cut_count_sequence(9, CutCountMethod::recurrence))
    return "cut-count recurrence differs from brute force";
  return {};
}

std::string degree_sequences() {
  return each_tree(8, [](const SyntaxTree& t) -> std::string {
    if (!(tree_from_degree_sequence(degree_sequence_of_tree(t)) == t)) return "degree sequence round trip fails";
    return {};
  });
}

std::string partial_sum_tree() {
  Rng rng(7);
  std::vector<WeightedEntry> entries;
  for (std::uint64_t id = 0; id < 1000; ++id) entries.push_back({id, static_cast<std::int64_t>(rng.uniform(0, 20))});
  PartialSumTree m(entries);
  for (int k = 0; k < 5000; ++k) {
    const std::uint64_t id = rng.uniform(0, 999);
    if (m.update(id, rng.uniform(0, 20)) > m.depth()) return "update touched more than depth slots";
    if (m.total() > 0 && m.weight(m.sample(rng)) == 0) return "sampled a zero-weight entry";
  }
  return m.audit() ? std::string{} : "cached sums are stale";
}

std::string sampler_invariant() {
  Rng rng(11);
  const WeightedTree t(uniform_random_tree(40, rng));
  std::string failure;
  for (int k = 0; k < 20; ++k) {
    const Run run = sample_run(t, rng, [&](std::size_t p, std::span<const NodeId> so_far, const PartialSumTree& m) {
      if (!failure.empty() || p == 1) return;
      if (m.total() != t.size() - p + 1) failure = "multiset total is not n - p + 1";
      std::vector<NodeId> support;
      for (NodeId v = 0; v < t.size(); ++v)
        if (m.weight(v) > 0) support.push_back(v);
      if (support != suspended_view(t, so_far).frontier) failure = "support differs from the frontier";
    });
    if (prefix_probability(t, run) != Rational(BigInt(1), hook_count(t))) return "sampled run has wrong probability";
  }
  return failure;
}

std::string parallel_matches_serial() {
  const SweepTotals a = sweep_trees(9), b = sweep_trees_serial(9);
  if (a.run_product != b.run_product || a.level_sums != b.level_sums || a.cut_sum != b.cut_sum)
    return "parallel sweep differs from serial";
  const WeightedTree t(parse_process("a.b.(c || d.(e || f))"));
  if (sample_runs(t, 5, 500) != sample_runs_serial(t, 5, 500)) return "parallel sampling differs from serial";
  return {};
}

}  // namespace

std::vector<CheckResult> run_selfchecks() {
  const std::vector<std::pair<std::string, Check>> checks{
      {"figure-one anchors", figure_one},
      {"run counts and profiles agree (n <= 6)", runs_and_profiles},
      {"sweep identities (n <= 8)", sweep_identities},
      {"recurrences", recurrences},
      {"degree-sequence round trip (n <= 8)", degree_sequences},
      {"partial sum tree audit", partial_sum_tree},
      {"sampler multiset invariant", sampler_invariant},
      {"parallel sweeps match serial", parallel_matches_serial},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace interleave
