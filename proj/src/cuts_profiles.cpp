#include "interleave/cuts_profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "interleave/enumerate.hpp"
#include "interleave/exact_counts.hpp"

namespace interleave {
namespace {

using Mask = std::uint64_t;

// All cuts of the subtree at v, as node masks.
std::vector<Mask> cuts_at(const SyntaxTree& t, NodeId v) {
  std::vector<Mask> acc{Mask{1} << v};
  for (NodeId c : t.children(v)) {
    const std::vector<Mask> sub = cuts_at(t, c);
    std::vector<Mask> next;
    next.reserve(acc.size() * (sub.size() + 1));
    for (Mask a : acc) {
      next.push_back(a);
      for (Mask s : sub) next.push_back(a | s);
    }
    acc = std::move(next);
  }
  return acc;
}

TermNode restrict(const SyntaxTree& t, NodeId v, Mask keep) {
  TermNode node{t.label(v), {}};
  for (NodeId c : t.children(v))
    if (keep >> c & 1) node.children.push_back(restrict(t, c, keep));
  return node;
}

// h[j] = Σ_i binom(j, i) f[i] g[j-i]
std::vector<BigInt> binomial_convolution(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  const std::size_t len = f.size() + g.size() - 1;
  std::vector<BigInt> h(len);
  BigInt binom, term;
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t lo = j >= g.size() ? j - g.size() + 1 : 0;
    const std::size_t hi = std::min(j, f.size() - 1);
    mpz_bin_uiui(binom.get_mpz_t(), j, lo);
    BigInt sum = 0;
    for (std::size_t i = lo;; ++i) {
      term = binom * f[i];
      sum += term * g[j - i];
      if (i == hi) break;
      binom *= static_cast<unsigned long>(j - i);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i + 1);
    }
    h[j] = std::move(sum);
  }
  return h;
}

LevelProfile fast_profile(const SyntaxTree& t) {
  if (t.size() > kMaxFastProfileSize)
    throw std::out_of_range("level_profile: tree size above " + std::to_string(kMaxFastProfileSize));
  // seq[v][j]: run prefixes of length j of the subtree at v (j = 0 included).
  std::vector<std::vector<BigInt>> seq(t.size());
  for (NodeId v = t.size(); v-- > 0;) {
    std::vector<BigInt> forest{BigInt(1)};
    for (NodeId c : t.children(v)) {
      forest = binomial_convolution(forest, seq[c]);
      std::vector<BigInt>().swap(seq[c]);
    }
    seq[v].reserve(forest.size() + 1);
    seq[v].push_back(1);
    for (auto& x : forest) seq[v].push_back(std::move(x));
  }
  LevelProfile p;
  p.counts.assign(seq[0].begin() + 1, seq[0].end());
  return p;
}

LevelProfile oracle_profile(const SyntaxTree& t) {
  LevelProfile p;
  p.counts.assign(t.size(), BigInt(0));
  for (const AdmissibleCut& cut : enumerate_admissible_cuts(t)) p.counts[cut.size - 1] += cut.labellings;
  return p;
}

}  // namespace

std::vector<AdmissibleCut> enumerate_admissible_cuts(const SyntaxTree& t, std::size_t limit) {
  if (t.size() > limit || t.size() > 64)
    throw std::out_of_range("cut enumeration: tree size " + std::to_string(t.size()) + " above limit " +
                            std::to_string(limit) + " (" + to_string(cut_count(t)) + " cuts)");
  std::vector<AdmissibleCut> cuts;
  for (Mask m : cuts_at(t, 0)) {
    AdmissibleCut cut{SyntaxTree::from_term(restrict(t, 0, m)), 0, 0, {}};
    cut.size = cut.shape.size();
    cut.labellings = hook_count(WeightedTree(cut.shape));
    for (NodeId v = 0; v < t.size(); ++v)
      if (m >> v & 1) cut.nodes.push_back(v);
    cuts.push_back(std::move(cut));
  }
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> order(cuts.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    order[k] = k;
    words.push_back(cuts[k].shape.preorder_degrees());
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cuts[a].size != cuts[b].size) return cuts[a].size > cuts[b].size;
    if (words[a] != words[b]) return words[a] < words[b];
    return cuts[a].nodes < cuts[b].nodes;
  });
  std::vector<AdmissibleCut> sorted;
  sorted.reserve(cuts.size());
  for (std::size_t k : order) sorted.push_back(std::move(cuts[k]));
  return sorted;
}

BigInt cut_count(const SyntaxTree& t) {
  std::vector<BigInt> c(t.size(), BigInt(1));
  for (NodeId v = t.size(); v-- > 0;)
    for (NodeId ch : t.children(v)) c[v] *= c[ch] + 1;
  return c[0];
}

std::vector<BigInt> cut_count_sequence(std::size_t N, CutCountMethod method) {
  std::vector<BigInt> m(N + 1, BigInt(0));
  if (method == CutCountMethod::brute) {
    if (N > 10) throw std::out_of_range("cut_count_sequence: brute force requires N <= 10");
    for (std::size_t n = 1; n <= N; ++n)
      TreeEnumerator(n).for_each([&](std::uint64_t, const SyntaxTree& t) { m[n] += cut_count(t); });
    return m;
  }
  if (N < 4) throw std::out_of_range("cut_count_sequence: recurrence requires N >= 4");
  m[1] = 1;
  m[2] = 2;
  m[3] = 7;
  for (std::size_t k = 0; k + 4 <= N; ++k) {
    const BigInt n(static_cast<unsigned long>(k));
    const BigInt n2 = n * n, n3 = n2 * n;
    const BigInt c0 = -500 * n + 2000 * n3;
    const BigInt c1 = 120 - 220 * n - 1380 * n2 - 920 * n3;
    const BigInt c2 = -(1488 + 1626 * n + 387 * n2 - 21 * n3);
    const BigInt c3 = 1104 + 1088 * n + 351 * n2 + 37 * n3;
    const BigInt c4 = 168 + 146 * n + 42 * n2 + 4 * n3;
    if (c4 == 0)
      throw std::logic_error("cut-count recurrence: vanishing leading coefficient at n = " + std::to_string(k));
    BigInt num = c0 * m[k] + c1 * m[k + 1] + c2 * m[k + 2] + c3 * m[k + 3];
    if (!mpz_divisible_p(num.get_mpz_t(), c4.get_mpz_t()))
      throw std::logic_error("cut-count recurrence: non-integral value at n = " + std::to_string(k + 4));
    mpz_divexact(m[k + 4].get_mpz_t(), num.get_mpz_t(), c4.get_mpz_t());
  }
  return m;
}

BigInt LevelProfile::total() const {
  BigInt s = 0;
  for (const BigInt& c : counts) s += c;
  return s;
}

LevelProfile level_profile(const SyntaxTree& t, ProfileMethod method) {
  return method == ProfileMethod::fast ? fast_profile(t) : oracle_profile(t);
}

BigInt semantic_size(const SyntaxTree& t) { return fast_profile(t).total(); }

ApproxReal limit_profile(double c, std::size_t n) {
  const double nd = static_cast<double>(n);
  if (n < 5 || !(c >= 2.0 / nd && c <= 1.0 - 2.0 / nd))
    throw std::out_of_range("limit_profile: c must lie in [2/n, 1 - 2/n]");
  constexpr mpfr_prec_t bits = 128;
  const Real cc(c, bits), one(1L, bits), two(2L, bits), nn(static_cast<long>(n), bits);
  const Real u = one - cc;
  const Real inner = u * log(two * u) - cc * log(cc) - (two - cc) * log(two - cc);
  Real f = u * nn * log(nn) + (cc - one + inner) * nn +
           log(sqrt(Real(4L, bits) - two * cc) / sqrt(cc));
  return ApproxReal{f, Real(kLimitProfileResidual / (c * (1.0 - c) * nd), bits)};
}

double leaf_levels_share(std::size_t n) {
  if (n < 2) throw std::out_of_range("leaf_levels_share: n must be at least 2");
  const auto k = std::min<std::size_t>(n, static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n)))));
  Rational part = 0;
  for (std::size_t i = 0; i < k; ++i) part += mean_level_width(n, i);
  Rational share = part / mean_size(n, SizeMethod::exact_sum);
  return share.get_d();
}

}  // namespace interleave
