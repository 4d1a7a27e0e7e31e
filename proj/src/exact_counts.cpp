#include "interleave/exact_counts.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace interleave {
namespace {

void require_positive(std::size_t n, const char* what) {
  if (n < 1) throw std::out_of_range(std::string(what) + ": n must be at least 1");
}

BigInt fact(std::size_t n) { return factorial(static_cast<unsigned long>(n)); }

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

BigInt catalan(std::size_t n) {
  require_positive(n, "catalan");
  BigInt c = binomial(2 * n - 2, n - 1);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n);
  return c;
}

BigInt increasing_count(std::size_t n) {
  require_positive(n, "increasing_count");
  BigInt num = fact(2 * n - 2);
  BigInt den = pow2(n - 1) * fact(n - 1);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

BigInt hook_count(const WeightedTree& t) {
  BigInt num = fact(t.size());
  BigInt den = product(t.weights());
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

Rational mean_width(std::size_t n) {
  require_positive(n, "mean_width");
  return ratio(fact(n), pow2(n - 1));
}

Rational mean_level_width(std::size_t n, std::size_t i) {
  require_positive(n, "mean_level_width");
  if (i >= n) throw std::out_of_range("mean_level_width: level " + std::to_string(i) + " not in [0, n-1]");
  BigInt num = pow2(i) * fact(2 * n - 2 * i - 1) * fact(n - 1) * fact(n);
  BigInt den = fact(2 * n - i - 1) * fact(n - i - 1) * pow2(n - 1) * fact(i);
  return ratio(num, den);
}

std::vector<Rational> mean_size_sequence(std::size_t N) {
  std::vector<Rational> s{Rational(0), Rational(1), Rational(2)};
  s.resize(std::max<std::size_t>(N + 1, 3));
  for (std::size_t m = 0; m + 3 <= N; ++m) {
    const BigInt n(static_cast<unsigned long>(m));
    const BigInt n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    const BigInt a0 = 2 * n4 + 12 * n3 + 22 * n2 + 12 * n;
    const BigInt a1 = 4 * n4 + 32 * n3 + 87 * n2 + 87 * n + 18;
    const BigInt a2 = 2 * n4 + 24 * n3 + 85 * n2 + 106 * n + 39;
    const BigInt a3 = 4 * n3 + 20 * n2 + 31 * n + 15;
    if (a3 == 0) throw std::logic_error("mean-size recurrence: vanishing leading coefficient");
    Rational next = (Rational(a0) * s[m] - Rational(a1) * s[m + 1] + Rational(a2) * s[m + 2]) / Rational(a3);
    s[m + 3] = next;
  }
  s.resize(N + 1);
  return s;
}

Rational mean_size(std::size_t n, SizeMethod method) {
  if (method == SizeMethod::recurrence) return mean_size_sequence(n)[n];
  Rational sum(0);
  for (std::size_t i = 0; i < n; ++i) sum += mean_level_width(n, i);
  return sum;
}

std::vector<Rational> r_sequence(std::size_t N) {
  std::vector<Rational> r{Rational(0), Rational(1), Rational(2)};
  r.resize(std::max<std::size_t>(N + 1, 3));
  for (std::size_t m = 0; m + 3 <= N; ++m) {
    const BigInt n(static_cast<unsigned long>(m));
    const BigInt n2 = n * n, n3 = n2 * n;
    const BigInt b0 = -16 * n;
    const BigInt b1 = 4 * (4 * n2 + 12 * n + 3);
    const BigInt b2 = -2 * (2 * n3 + 18 * n2 + 31 * n + 13);
    const BigInt b3 = 4 * n3 + 20 * n2 + 31 * n + 15;
    Rational next = -(Rational(b0) * r[m] + Rational(b1) * r[m + 1] + Rational(b2) * r[m + 2]) / Rational(b3);
    r[m + 3] = next;
  }
  r.resize(N + 1);
  return r;
}

ApproxReal asymptotic_size(std::size_t n, int terms, mpfr_prec_t bits) {
  require_positive(n, "asymptotic_size");
  if (terms < 1 || terms > 4) throw std::out_of_range("asymptotic_size: terms must be in [1, 4]");
  const Real e = Real::e(bits);
  const Real nn(static_cast<long>(n), bits);
  Real lead = e * sqrt(Real(2L, bits) * Real::pi(bits) * nn) * pow(nn / (Real(2L, bits) * e), nn);
  const Rational coeffs[] = {Rational(2), Rational(2, 3), Rational(49, 36), Rational(27449, 6480)};
  Real series = Real::zero(bits);
  Real npow(1L, bits);
  for (int k = 0; k < terms; ++k) {
    series += Real(coeffs[k], bits) / npow;
    npow *= nn;
  }
  Real value = lead * series;
  // Rounding only; the truncation error of the series is not bounded here.
  Real err = abs(value) * Real(static_cast<long>(16 * (n + 8)), bits);
  mpfr_mul_2si(err.raw(), err.raw(), -bits, MPFR_RNDU);
  return ApproxReal{value, err};
}

Rational geometric_mean_exponent(std::size_t n, std::size_t k) {
  const Rational w = ratio(catalan(k) * catalan(n - k + 1) * static_cast<unsigned long>(n + 1 - k),
                           catalan(n) * 2UL);
  return Rational(1) - w;
}

ApproxReal geometric_mean_width(std::size_t n, mpfr_prec_t bits) {
  if (n < 2) throw std::out_of_range("geometric_mean_width: n must be at least 2");
  const mpfr_prec_t work = bits + 32;
  Real log_sum = Real::zero(work);
  for (std::size_t k = 2; k + 1 <= n; ++k)
    log_sum += Real(geometric_mean_exponent(n, k), work) * log(Real(static_cast<long>(k), work));
  Real value = exp(log_sum);
  Real rounded(0L, bits);
  mpfr_set(rounded.raw(), value.raw(), MPFR_RNDN);
  Real err = abs(rounded) * Real(static_cast<long>(4 * n + 4), bits);
  mpfr_mul_2si(err.raw(), err.raw(), -bits, MPFR_RNDU);
  return ApproxReal{rounded, err};
}

std::vector<BigInt> nonplane_sequence(std::size_t N) {
  // T_{m+1} = (1/m) Σ_{k=1}^{m} (Σ_{d|k} d·T_d) T_{m-k+1}
  std::vector<BigInt> t(N + 1, BigInt(0));
  std::vector<BigInt> divisor_sum(N + 1, BigInt(0));
  if (N >= 1) t[1] = 1;
  for (std::size_t m = 1; m < N; ++m) {
    // T_1..T_m are final, so the divisor sum for k = m is complete.
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) divisor_sum[m] += t[d] * static_cast<unsigned long>(d);
    BigInt acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += divisor_sum[k] * t[m - k + 1];
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), m);
    t[m + 1] = acc;
  }
  return t;
}

BigInt nonplane_count(std::size_t n) {
  require_positive(n, "nonplane_count");
  return nonplane_sequence(n)[n];
}

Rational nonplane_mean_width(std::size_t n) {
  require_positive(n, "nonplane_mean_width");
  return ratio(fact(n - 1), nonplane_count(n));
}

BigInt catalan_power_coeff(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw std::out_of_range("catalan_power_coeff: n and k must be at least 1");
  BigInt c = binomial(k + 2 * n - 1, n - 1) * static_cast<unsigned long>(k);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n);
  return c;
}

bool level_bounds_check(std::size_t n, std::size_t i) {
  require_positive(n, "level_bounds_check");
  if (i >= n) throw std::out_of_range("level_bounds_check: level not in [0, n-1]");
  if (i * i >= 2 * n) throw std::out_of_range("level_bounds_check: requires i^2 < 2n");
  const Rational normalized = ratio(pow2(n - 1) * fact(i), fact(n)) * mean_level_width(n, i);
  const Rational slack =
      Rational(1) - ratio(BigInt(static_cast<unsigned long>(i * i)), BigInt(static_cast<unsigned long>(2 * n)));
  return normalized >= 1 && normalized * slack <= 1;
}

}  // namespace interleave
