#include <cmath>
#include <numbers>

#include "doctest.h"
#include "interleave/constants.hpp"
#include "interleave/exact_counts.hpp"

using namespace interleave;

namespace {
constexpr double kReferenceL = 0.5790439217;
constexpr double kReferenceEta = 0.3383218;
constexpr double kReferenceGamma = 1.559490;
}  // namespace

TEST_CASE("L(1/4) enclosure") {
  const ApproxReal l = log_constant_L(1e-6);
  CHECK(l.error.to_double() <= 1e-6);
  CHECK(l.contains(Real(kReferenceL)));
  CHECK(static_cast<double>(log_constant_L_partial(1000)) < (l.value - l.error).to_double());
  const ApproxReal coarse = log_constant_L(1e-4);
  CHECK(coarse.contains(Real(kReferenceL)));
  CHECK(coarse.error.to_double() <= 1e-4);
}

TEST_CASE("L(1/4) argument checks") {
  CHECK_THROWS_AS(log_constant_L(1e-8), std::invalid_argument);
  CHECK_THROWS_AS(log_constant_L(1e-6, 4096), std::runtime_error);
}

TEST_CASE("L(1/4) direct sum approaches the enclosure") {
  const double accelerated = log_constant_L(1e-6).value.to_double();
  const double direct = static_cast<double>(log_constant_L_partial(30'000'000));
  CHECK(direct < accelerated);
  CHECK(accelerated - direct < 2e-3);
}

TEST_CASE("eta from non-plane tree ratios") {
  CHECK(std::abs(estimate_eta(400) - kReferenceEta) < 1e-3);
  // Extrapolation beats the raw ratio at the same n.
  const auto t = nonplane_sequence(401);
  const double raw = (Real(t[399], 256) / Real(t[400], 256)).to_double();
  CHECK(std::abs(estimate_eta(400) - kReferenceEta) < std::abs(raw - kReferenceEta));
  CHECK_THROWS_AS(estimate_eta(3), std::out_of_range);
}

TEST_CASE("non-plane mean width approaches its asymptotic form") {
  auto deviation = [](std::size_t n) {
    const Real exact(nonplane_mean_width(n), 256);
    return std::abs((exact / nonplane_width_asymptotic(n, kReferenceEta, kReferenceGamma, 256)).to_double() - 1);
  };
  const double d50 = deviation(50), d100 = deviation(100), d200 = deviation(200);
  CHECK(d100 < d50);
  CHECK(d200 < d100);
}
