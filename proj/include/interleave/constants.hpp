#pragma once

#include <cstddef>

#include "interleave/numeric.hpp"

namespace interleave {

/// L(1/4) = Σ_{n>1} log n · C_n · 4^{-n}.
///
/// The returned enclosure is the partial sum up to N plus the midpoint of
/// two integral bounds on the tail; the tail bounds come from the Wallis
/// inequalities 4^m/sqrt(π(m+1/2)) <= binom(2m, m) <= 4^m/sqrt(π(m+1/4)).
/// N doubles until the enclosure half-width is at most `target_abs_error`.
///
/// Throws std::invalid_argument for targets below 1e-7 and
/// std::runtime_error when `max_terms` is reached first.
ApproxReal log_constant_L(double target_abs_error, std::size_t max_terms = std::size_t{1} << 24);

/// Plain partial sum Σ_{n=2}^{N} log n · C_n · 4^{-n} in extended precision,
/// with no tail correction.
long double log_constant_L_partial(std::size_t N);

/// η from the ratios T_{n+1}/T_n of non-plane tree counts, extrapolated
/// with one Richardson step at n = n_max - 1.
double estimate_eta(std::size_t n_max = 400);

/// 2√2·π·n/γ · (nη/e)^n, the asymptotic mean width over non-plane trees.
Real nonplane_width_asymptotic(std::size_t n, double eta, double gamma, mpfr_prec_t bits = 128);

}  // namespace interleave
