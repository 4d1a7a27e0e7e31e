#pragma once

#include <cstddef>
#include <vector>

#include "interleave/numeric.hpp"
#include "interleave/syntax_tree.hpp"

namespace interleave {

// Exact counting sequences over plane trees of size n. Every sequence value
// is an integer or a reduced rational; floating evaluation only happens in
// the functions returning ApproxReal.
//
// Level conventions: `i` counts levels from the leaves (i = 0 is the leaf
// level, i = n-1 the root), so W̄^i_n is the mean node count at depth n-1-i.

/// Number of plane trees with n nodes (shifted Catalan: 1, 1, 2, 5, 14, ...).
BigInt catalan(std::size_t n);

/// Increasing plane trees of size n: 1·3·5⋯(2n-3) = (2n-2)!/(2^{n-1}(n-1)!).
BigInt increasing_count(std::size_t n);

/// Runs of a tree (its linear extensions): |T|! / Π subtree sizes.
BigInt hook_count(const WeightedTree& t);

/// Mean number of runs over trees of size n: n!/2^{n-1}.
Rational mean_width(std::size_t n);

/// Mean number of semantic-tree nodes at depth n-1-i, 0 <= i <= n-1.
Rational mean_level_width(std::size_t n, std::size_t i);

enum class SizeMethod { exact_sum, recurrence };

/// Mean semantic-tree size S̄_n (S̄_0 = 0).
Rational mean_size(std::size_t n, SizeMethod method = SizeMethod::recurrence);

/// S̄_0 .. S̄_N from the order-3 P-recurrence seeded with 0, 1, 2.
std::vector<Rational> mean_size_sequence(std::size_t N);

/// R_0 .. R_N where R_n = S̄_n 2^{n-1}/n!, from their own P-recurrence.
std::vector<Rational> r_sequence(std::size_t N);

/// e·sqrt(2πn)·(n/2e)^n·(2 + 2/(3n) + 49/(36n²) + 27449/(6480n³)).
/// `terms` (1..4) truncates the bracketed series.
ApproxReal asymptotic_size(std::size_t n, int terms = 4, mpfr_prec_t bits = 192);

/// Geometric mean of the run counts over all trees of size n, from the
/// product Π_{k=2}^{n-1} k^{1 - (n+1-k)/2 · C_k C_{n-k+1} / C_n}.
ApproxReal geometric_mean_width(std::size_t n, mpfr_prec_t bits = 128);

/// Rational exponent of k in the geometric-mean product.
Rational geometric_mean_exponent(std::size_t n, std::size_t k);

/// Unlabelled non-plane rooted trees T_1 .. T_N (index 0 holds 0).
std::vector<BigInt> nonplane_sequence(std::size_t N);
BigInt nonplane_count(std::size_t n);

/// (n-1)!/T_n: mean runs over non-plane trees of size n.
Rational nonplane_mean_width(std::size_t n);

/// [z^n](C(z)/z)^k = (k/n)·binom(k+2n-1, n-1).
BigInt catalan_power_coeff(std::size_t n, std::size_t k);

/// Checks 1 <= (2^{n-1} i!/n!)·W̄^i_n <= 1/(1 - i²/(2n)) exactly.
/// Requires i² < 2n.
bool level_bounds_check(std::size_t n, std::size_t i);

}  // namespace interleave
