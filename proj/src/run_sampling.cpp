#include "interleave/run_sampling.hpp"

#include <stdexcept>
#include <utility>

namespace interleave {

Rational prefix_probability(const WeightedTree& t, std::span<const NodeId> prefix, std::size_t* steps) {
  validate_prefix(t.tree(), prefix);
  const std::size_t n = t.size();
  std::vector<std::uint64_t> num, den;
  num.reserve(prefix.size());
  den.reserve(prefix.size());
  std::size_t count = 0;
  for (std::size_t k = 1; k < prefix.size(); ++k, ++count) {
    num.push_back(t.weight(prefix[k]));
    den.push_back(n - k);
  }
  if (steps) *steps = count;
  Rational r(product(num), product(den));
  r.canonicalize();
  return r;
}

std::vector<Rational> step_probabilities(const WeightedTree& t, std::span<const NodeId> prefix) {
  validate_prefix(t.tree(), prefix);
  std::vector<Rational> out{Rational(1)};
  for (std::size_t k = 1; k < prefix.size(); ++k) {
    Rational f(static_cast<unsigned long>(t.weight(prefix[k])), static_cast<unsigned long>(t.size() - k));
    f.canonicalize();
    out.push_back(f);
  }
  return out;
}

BigInt count_runs_via_probability(const WeightedTree& t) {
  RunPrefix preorder(t.size());
  for (NodeId v = 0; v < t.size(); ++v) preorder[v] = v;
  const Rational p = prefix_probability(t, preorder);
  if (p.get_num() != 1) throw std::logic_error("run probability is not a unit fraction");
  return p.get_den();
}

Run sample_run(const WeightedTree& wt, Rng& rng, const SampleObserver& observer) {
  const SyntaxTree& t = wt.tree();
  const std::size_t n = t.size();
  std::vector<WeightedEntry> entries(n);
  for (NodeId v = 0; v < n; ++v) entries[v] = {v, 0};
  entries[0].weight = static_cast<std::int64_t>(n);
  PartialSumTree m(entries);

  Run run;
  run.reserve(n);
  // Σ ids of the actions not yet taken; names the last one without a draw.
  std::uint64_t remaining = n * (n - 1) / 2;
  for (std::size_t p = 1; p < n; ++p) {
    if (observer) observer(p, run, m);
    const NodeId a = m.sample(rng);
    run.push_back(a);
    remaining -= a;
    m.update(a, 0);
    for (NodeId c : t.children(a)) m.update(c, wt.weight(c));
  }
  if (observer) observer(n, run, m);
  run.push_back(remaining);
  return run;
}

SyntaxTree uniform_random_tree(std::size_t n, Rng& rng) {
  if (n < 1) throw std::out_of_range("uniform_random_tree: n must be at least 1");
  const std::size_t len = 2 * n - 1;
  // +1 up, -1 down; n-1 ups and n downs.
  std::vector<int> steps(len, -1);
  for (std::size_t k = 0; k + 1 < n; ++k) steps[k] = 1;
  for (std::size_t k = len; k > 1; --k) std::swap(steps[k - 1], steps[rng.uniform(0, k - 1)]);

  // Rotate to start just after the first minimum of the prefix sums.
  long sum = 0, best = 1;
  std::size_t start = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sum += steps[k];
    if (sum < best) {
      best = sum;
      start = k + 1;
    }
  }
  std::vector<std::size_t> degrees{0};
  std::vector<std::size_t> stack{0};
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (steps[(start + k) % len] > 0) {
      ++degrees[stack.back()];
      stack.push_back(degrees.size());
      degrees.push_back(0);
    } else {
      stack.pop_back();
    }
  }
  return SyntaxTree::from_preorder_degrees(degrees);
}

std::string format_run(const SyntaxTree& t, std::span<const NodeId> run) {
  std::string out;
  for (std::size_t k = 0; k < run.size(); ++k) {
    if (k) out += ' ';
    out += action_name(t, run[k]);
  }
  return out;
}

}  // namespace interleave
