#include "interleave/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "interleave/exact_counts.hpp"

namespace interleave {
namespace {

constexpr mpfr_prec_t kBits = 128;

// ∫_a^∞ log x · x^{-3/2} dx
Real tail_integral(const Real& a) { return Real(2L, kBits) * (log(a) + Real(2L, kBits)) / sqrt(a); }

}  // namespace

ApproxReal log_constant_L(double target_abs_error, std::size_t max_terms) {
  if (!(target_abs_error >= 1e-7))
    throw std::invalid_argument("log_constant_L: target error must be at least 1e-7");

  const Real k = Real(1L, kBits) / (Real(4L, kBits) * sqrt(Real::pi(kBits)));
  Real partial = Real::zero(kBits);
  Real term = Real(1L, kBits) / Real(16L, kBits);  // C_2 · 4^{-2}
  std::size_t n = 2;
  std::size_t N = 1024;
  for (;;) {
    for (; n <= N; ++n) {
      partial += log(Real(static_cast<long>(n), kBits)) * term;
      // C_{n+1} / (4 C_n) = (2n - 1) / (2n + 2)
      term *= Real(static_cast<long>(2 * n - 1), kBits) / Real(static_cast<long>(2 * n + 2), kBits);
    }
    const Real nN(static_cast<long>(N), kBits);
    const Real lo = k * tail_integral(nN + Real(1L, kBits));
    const Real shrink = Real(1L, kBits) - Real(3L, kBits) / (Real(4L, kBits) * nN);
    const Real hi = k / sqrt(shrink) * tail_integral(nN);
    Real half_width = (hi - lo) / Real(2L, kBits);
    // Accumulated rounding of N additions at 128 bits, generously bounded.
    Real rounding(static_cast<long>(8 * N), kBits);
    mpfr_mul_2si(rounding.raw(), rounding.raw(), -(kBits - 8), MPFR_RNDU);
    half_width += rounding;
    if (half_width.to_double() <= target_abs_error)
      return ApproxReal{partial + (lo + hi) / Real(2L, kBits), half_width};
    if (2 * N > max_terms)
      throw std::runtime_error("log_constant_L: target error not reachable within the term limit");
    N *= 2;
  }
}

long double log_constant_L_partial(std::size_t N) {
  long double sum = 0.0L;
  long double term = 1.0L / 16.0L;
  for (std::size_t n = 2; n <= N; ++n) {
    sum += std::log(static_cast<long double>(n)) * term;
    term *= static_cast<long double>(2 * n - 1) / static_cast<long double>(2 * n + 2);
  }
  return sum;
}

double estimate_eta(std::size_t n_max) {
  if (n_max < 4) throw std::out_of_range("estimate_eta: n_max must be at least 4");
  const std::vector<BigInt> t = nonplane_sequence(n_max);
  auto ratio = [&t](std::size_t n) { return Real(t[n + 1], 256) / Real(t[n], 256); };
  const std::size_t n = n_max - 2;
  // x_n = 1/η + c/n + O(1/n²)  ⇒  (n+1)x_{n+1} - n·x_n = 1/η + O(1/n²)
  Real x = Real(static_cast<long>(n + 1), 256) * ratio(n + 1) - Real(static_cast<long>(n), 256) * ratio(n);
  return 1.0 / x.to_double();
}

Real nonplane_width_asymptotic(std::size_t n, double eta, double gamma, mpfr_prec_t bits) {
  const Real nn(static_cast<long>(n), bits);
  Real base = nn * Real(eta, bits) / Real::e(bits);
  return Real(2L, bits) * sqrt(Real(2L, bits)) * Real::pi(bits) * nn / Real(gamma, bits) * pow(base, nn);
}

}  // namespace interleave
