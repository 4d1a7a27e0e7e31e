#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "interleave/numeric.hpp"
#include "interleave/partial_sum_tree.hpp"
#include "interleave/rng.hpp"
#include "interleave/syntax_tree.hpp"

namespace interleave {

/// A complete run: every action of the tree, in an order compatible with
/// the tree-poset.
using Run = RunPrefix;

/// Probability that a uniformly random run starts with `prefix`:
/// Π_{k=2}^{p} |T(α_k)| / (n-k+1). Validates the prefix first (throws
/// InvalidPrefix). `steps`, when given, receives the number of factors
/// multiplied in, which is p - 1.
Rational prefix_probability(const WeightedTree& t, std::span<const NodeId> prefix, std::size_t* steps = nullptr);

/// The per-step factors |T(α_k)| / (n-k+1), k = 1..p (the first is 1).
std::vector<Rational> step_probabilities(const WeightedTree& t, std::span<const NodeId> prefix);

/// Number of runs as the inverse probability of the preorder run.
BigInt count_runs_via_probability(const WeightedTree& t);

/// Called before each draw with the round number p (1-based, so p-1 actions
/// are already in `so_far`) and the multiset about to be sampled.
using SampleObserver = std::function<void(std::size_t p, std::span<const NodeId> so_far, const PartialSumTree& m)>;

/// Uniform random run. The multiset starts as {root: n} over preorder ids
/// (every other id present with weight 0); each round draws an enabled
/// action by weight, zeroes it and gives its children their subtree sizes.
/// The first n-1 actions are drawn, the last one is the only element left.
Run sample_run(const WeightedTree& t, Rng& rng, const SampleObserver& observer = {});

/// Uniform plane tree of size n: a random arrangement of n-1 up steps and n
/// down steps, rotated into a Lukasiewicz path by the cycle lemma.
SyntaxTree uniform_random_tree(std::size_t n, Rng& rng);

/// "a#1 b#2 d#3 ..."
std::string format_run(const SyntaxTree& t, std::span<const NodeId> run);

}  // namespace interleave
