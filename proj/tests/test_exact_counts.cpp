#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "doctest.h"
#include "interleave/cuts_profiles.hpp"
#include "interleave/enumerate.hpp"
#include "interleave/exact_counts.hpp"
#include "interleave/parser.hpp"
#include "oracles.hpp"

using namespace interleave;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

BigInt ul(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Σ over trees of size n of the brute-force prefix counts, by depth.
std::vector<BigInt> brute_level_sums(std::size_t n) {
  std::vector<BigInt> sums(n, BigInt(0));
  TreeEnumerator(n).for_each([&](std::uint64_t, const SyntaxTree& t) {
    const auto c = oracle::prefix_counts(t);
    for (std::size_t l = 0; l < n; ++l) sums[l] += c[l];
  });
  return sums;
}

}  // namespace

TEST_CASE("catalan") {
  const auto c = oracle::catalan(30);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(catalan(n) == c[n]);
  CHECK(catalan(4) == 5);
  CHECK_THROWS_AS(catalan(0), std::out_of_range);
  // Four-term asymptotic series at n = 20 as an enclosure.
  const double ratio = catalan(20).get_d() * std::sqrt(std::numbers::pi * 8000.0) / std::pow(4.0, 19);
  CHECK(std::abs(ratio - (1.0 + 3.0 / 160.0)) <= 1e-3);
}

TEST_CASE("increasing trees") {
  CHECK(increasing_count(1) == 1);
  CHECK(increasing_count(3) == 3);
  BigInt odd = 1;
  for (std::size_t n = 2; n <= 25; ++n) {
    odd *= static_cast<unsigned long>(2 * n - 3);
    CHECK(increasing_count(n) == odd);
  }
  CHECK_THROWS_AS(increasing_count(0), std::out_of_range);
}

TEST_CASE("hook counts equal brute-force run counts") {
  CHECK(hook_count(WeightedTree(parse_process("a.b.(c || d.(e || f))"))) == 8);
  CHECK(hook_count(WeightedTree(parse_process("a.b.c.d.e.f.g"))) == 1);
  CHECK(hook_count(WeightedTree(parse_process("a.(b || c || d || e)"))) == 24);
  for (std::size_t n = 1; n <= 8; ++n)
    TreeEnumerator(n).for_each([](std::uint64_t, const SyntaxTree& t) {
      const WeightedTree w(t);
      const BigInt h = hook_count(w);
      CHECK(h == oracle::run_count(t));
      BigInt prod = 1;
      for (auto x : w.weights()) prod *= static_cast<unsigned long>(x);
      CHECK(h * prod == oracle::factorial(t.size()));
    });
}

TEST_CASE("sum of hook counts is the increasing count") {
  for (std::size_t n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    TreeEnumerator(n).for_each([&](std::uint64_t, const SyntaxTree& t) { sum += hook_count(WeightedTree(t)); });
    CHECK(sum == increasing_count(n));
  }
}

TEST_CASE("mean width") {
  CHECK(mean_width(1) == 1);
  CHECK(mean_width(3) == q(3, 2));
  CHECK(mean_width(6) == q(45, 2));
  const auto c = oracle::catalan(30);
  for (std::size_t n = 1; n <= 30; ++n) {
    Rational expected(increasing_count(n), c[n]);
    expected.canonicalize();
    CHECK(mean_width(n) == expected);
  }
}

TEST_CASE("mean level width against brute force") {
  CHECK(mean_level_width(6, 2) == q(25, 2));
  const auto c = oracle::catalan(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto sums = brute_level_sums(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational expected(sums[n - 1 - i], c[n]);
      expected.canonicalize();
      CHECK(mean_level_width(n, i) == expected);
    }
  }
  CHECK_THROWS_AS(mean_level_width(5, 5), std::out_of_range);
  CHECK_THROWS_AS(mean_level_width(0, 0), std::out_of_range);
}

TEST_CASE("mean level width endpoints and integrality") {
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(mean_level_width(n, 0) == mean_width(n));
    CHECK(mean_level_width(n, n - 1) == 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational cumulative = mean_level_width(n, i) * catalan(n);
      CHECK(cumulative.get_den() == 1);
      CHECK(cumulative >= 0);
    }
  }
}

TEST_CASE("mean size") {
  CHECK(mean_size(0) == 0);
  CHECK(mean_size(1) == 1);
  CHECK(mean_size(2) == 2);
  CHECK(mean_size(3) == 4);
  CHECK(mean_size(3, SizeMethod::exact_sum) == 4);
  CHECK(Rational(mean_size(6) * catalan(6)).get_den() == 1);
  const std::vector<BigInt> cumulative{0, 1, 2, 8, 44, 312, 2772, 30024, 385688};
  for (std::size_t n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    TreeEnumerator(n).for_each([&](std::uint64_t, const SyntaxTree& t) { sum += oracle::semantic_size(t); });
    CHECK(sum == cumulative[n]);
    CHECK(mean_size(n) * catalan(n) == Rational(sum));
  }
  const auto s = mean_size_sequence(30);
  for (std::size_t n = 1; n <= 30; ++n) {
    Rational levels = 0;
    for (std::size_t i = 0; i < n; ++i) levels += mean_level_width(n, i);
    CHECK(s[n] == levels);
    CHECK(mean_size(n, SizeMethod::exact_sum) == levels);
  }
}

TEST_CASE("R sequence") {
  const auto r = r_sequence(40);
  CHECK(r[0] == 0);
  CHECK(r[1] == 1);
  CHECK(r[2] == 2);
  CHECK(r[3] == q(8, 3));
  const auto s = mean_size_sequence(40);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(r[n] * factorial(n) / pow2(n - 1) == s[n]);
  // R_n tends to e from above, R_n ≈ e(1 + 1/(4n)); it peaks at n = 5.
  for (std::size_t n = 5; n < 40; ++n) CHECK(r[n + 1] < r[n]);
  CHECK(r[5] > r[4]);
  const double r30 = r[30].get_d();
  CHECK(r30 > std::numbers::e);
  CHECK(r30 < 2.75);
  CHECK(r30 == doctest::Approx(std::numbers::e * (1 + 1.0 / 120)).epsilon(1e-3));
}

TEST_CASE("asymptotic size") {
  const Real s30(mean_size(30), 192), s60(mean_size(60), 192);
  const double dev30 = std::abs((s30 / asymptotic_size(30).value).to_double() - 1);
  const double dev60 = std::abs((s60 / asymptotic_size(60).value).to_double() - 1);
  CHECK(dev30 < 1e-3);
  CHECK(dev60 < dev30);
  const double lead = std::abs((s30 / asymptotic_size(30, 1).value).to_double() - 1);
  CHECK(lead >= 0.5 / 90);
  CHECK(lead <= 2.0 / 90);
  CHECK_THROWS_AS(asymptotic_size(10, 5), std::out_of_range);
}

TEST_CASE("mean width follows the Stirling form") {
  const double n = 40;
  const double stirling_log = std::log(2 * std::sqrt(2 * std::numbers::pi * n)) + n * std::log(n / (2 * std::numbers::e));
  const double exact_log = log_double(factorial(40)) - 39 * std::log(2.0);
  CHECK(std::abs(std::exp(exact_log - stirling_log) - 1) < 0.01);
}

TEST_CASE("geometric mean width") {
  CHECK(geometric_mean_width(2).value.to_double() == 1.0);
  CHECK(std::abs(geometric_mean_width(3).value.to_double() - std::sqrt(2.0)) < 1e-15);
  for (std::size_t n = 3; n <= 9; ++n) {
    // Brute force: (Π ℓ_T)^{1/C_n} from run counts found by search.
    BigInt prod = 1;
    std::size_t trees = 0;
    TreeEnumerator(n).for_each([&](std::uint64_t, const SyntaxTree& t) {
      prod *= oracle::run_count(t);
      ++trees;
    });
    const Real brute = exp(log(Real(prod, 192)) / Real(static_cast<long>(trees), 192));
    const Real got = geometric_mean_width(n).value;
    CHECK(abs((got - brute) / brute).to_double() < 1e-9);
  }
  CHECK(geometric_mean_exponent(4, 2) == q(2, 5));
  CHECK(geometric_mean_exponent(4, 3) == q(3, 5));
  CHECK_THROWS_AS(geometric_mean_width(1), std::out_of_range);
}

TEST_CASE("non-plane trees") {
  const auto t = nonplane_sequence(10);
  const std::vector<long> expected{0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(t[n] == expected[n]);
  CHECK(nonplane_count(1) == 1);
  CHECK(nonplane_count(4) == 4);
  CHECK(nonplane_mean_width(1) == 1);
  CHECK(nonplane_mean_width(4) == q(3, 2));
  CHECK_THROWS_AS(nonplane_count(0), std::out_of_range);
}

TEST_CASE("non-plane trees by deduplicating plane shapes") {
  // Canonical unordered form: children's forms sorted.
  std::function<std::string(const SyntaxTree&, NodeId)> canon = [&](const SyntaxTree& t, NodeId v) {
    std::vector<std::string> parts;
    for (NodeId c : t.children(v)) parts.push_back(canon(t, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<std::string> shapes;
    for (const SyntaxTree& t : enumerate_trees(n)) shapes.insert(canon(t, 0));
    CHECK(nonplane_count(n) == ul(shapes.size()));
  }
}

TEST_CASE("catalan power coefficients") {
  CHECK(catalan_power_coeff(1, 1) == 1);
  CHECK(catalan_power_coeff(3, 2) == 14);
  for (std::size_t n = 1; n <= 20; ++n) {
    BigInt c = binomial(2 * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
    CHECK(catalan_power_coeff(n, 1) == c);
  }
  // Series product check: (C(z)/z)^3 through z^6.
  const auto c = oracle::catalan(8);
  std::vector<BigInt> base(7), sq(7, BigInt(0)), cube(7, BigInt(0));
  for (std::size_t m = 0; m <= 6; ++m) base[m] = c[m + 1];
  for (std::size_t a = 0; a <= 6; ++a)
    for (std::size_t b = 0; a + b <= 6; ++b) sq[a + b] += base[a] * base[b];
  for (std::size_t a = 0; a <= 6; ++a)
    for (std::size_t b = 0; a + b <= 6; ++b) cube[a + b] += sq[a] * base[b];
  for (std::size_t n = 1; n <= 6; ++n) CHECK(catalan_power_coeff(n, 3) == cube[n]);
  CHECK_THROWS_AS(catalan_power_coeff(0, 1), std::out_of_range);
}

TEST_CASE("level bounds") {
  CHECK(level_bounds_check(50, 3));
  CHECK(level_bounds_check(7, 0));
  for (std::size_t i = 0; i * i < 200; ++i) CHECK(level_bounds_check(100, i));
  CHECK_THROWS_AS(level_bounds_check(10, 5), std::out_of_range);
  CHECK_THROWS_AS(level_bounds_check(10, 10), std::out_of_range);
}

TEST_CASE("level profiles widen toward the leaves") {
  for (std::size_t n = 1; n <= 12; n += (n < 10 ? 1 : 2))
    TreeEnumerator(n).for_each([](std::uint64_t, const SyntaxTree& t) {
      const LevelProfile p = level_profile(t);
      CHECK(std::is_sorted(p.counts.begin(), p.counts.end()));
    });
}
