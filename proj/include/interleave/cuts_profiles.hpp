#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "interleave/numeric.hpp"
#include "interleave/syntax_tree.hpp"

namespace interleave {

inline constexpr std::size_t kDefaultCutOracleLimit = 18;
inline constexpr std::size_t kMaxFastProfileSize = 5000;

/// A prefix-closed subtree of a source tree that shares its root, i.e. what
/// is left after recursively removing leaves.
struct AdmissibleCut {
  SyntaxTree shape;            // labels copied from the source
  std::size_t size = 0;
  BigInt labellings;           // increasing labellings of the shape
  std::vector<NodeId> nodes;   // source preorder positions, ascending
};

/// Every admissible cut of t, ordered by size descending, then by the
/// shape's preorder degree word, then by node set. Throws std::out_of_range
/// above `limit`; the message carries the exact cut count.
std::vector<AdmissibleCut> enumerate_admissible_cuts(const SyntaxTree& t,
                                                     std::size_t limit = kDefaultCutOracleLimit);

/// Number of admissible cuts: c(v) = Π_children (1 + c(child)).
BigInt cut_count(const SyntaxTree& t);

enum class CutCountMethod { brute, recurrence };

/// Cumulative cut counts m_0 .. m_N over all trees of each size.
/// brute requires N <= 10; recurrence requires N >= 4.
std::vector<BigInt> cut_count_sequence(std::size_t N, CutCountMethod method);

/// counts[l] is the number of semantic-tree nodes at depth l, which is the
/// number of run prefixes of length l+1. In the leaf-indexed convention
/// this is level i = n-1-l.
struct LevelProfile {
  std::vector<BigInt> counts;

  std::size_t size() const { return counts.size(); }
  const BigInt& at_depth(std::size_t l) const { return counts.at(l); }
  const BigInt& at_level(std::size_t i) const { return counts.at(counts.size() - 1 - i); }
  BigInt total() const;
};

enum class ProfileMethod { oracle, fast };

/// oracle sums increasing labellings over admissible cuts grouped by size;
/// fast multiplies the children's prefix-count series (exponential
/// generating functions kept as integer sequences) and shifts by one.
LevelProfile level_profile(const SyntaxTree& t, ProfileMethod method = ProfileMethod::fast);

/// Node count of the semantic tree.
BigInt semantic_size(const SyntaxTree& t);

/// Calibrated residual constant: on the sweeps c ∈ {0.3, 0.5} and
/// n ∈ {100, 200, 400}, c(1-c)n·|f(c,n) - ln W̄| stayed below 0.047.
inline constexpr double kLimitProfileResidual = 0.05;

/// f(c, n) = (1-c)n ln n + (c - 1 + ln((2-2c)^{1-c} / (c^c (2-c)^{2-c})))n
///           + ln(sqrt(4-2c)/sqrt(c)),
/// an approximation of ln W̄^{⌊cn⌋}_n. The error field is the calibrated
/// bound kLimitProfileResidual / (c(1-c)n), not a proof.
/// Throws std::out_of_range unless c ∈ [2/n, 1 - 2/n].
ApproxReal limit_profile(double c, std::size_t n);

/// Fraction of S̄_n carried by the ⌈ln n⌉ levels nearest the leaves.
double leaf_levels_share(std::size_t n);

}  // namespace interleave
