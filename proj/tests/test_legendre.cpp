#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "glasser/legendre.hpp"
#include "glasser/quadrature.hpp"

using glasser::complete_k;
using glasser::complete_pi;
using glasser::ellip_f;
using glasser::ellip_pi;

namespace {

constexpr double kPiHalf = 1.5707963267948966;
constexpr double kSqrt3 = 1.7320508075688772;

// Defining integrals, evaluated by tanh-sinh; the integrands are smooth
// for k < 1 and n sin^2(phi) < 1, so this is a plain quadrature check
// that is independent of the Carlson reduction.
double f_by_quadrature(double phi, double k) {
  return glasser::integrate_finite(
             [=](double t) {
               const double s = std::sin(t);
               return 1.0 / std::sqrt(1.0 - k * k * s * s);
             },
             0.0, phi)
      .value;
}

double pi_by_quadrature(double phi, double n, double k) {
  return glasser::integrate_finite(
             [=](double t) {
               const double s2 = std::sin(t) * std::sin(t);
               return 1.0 /
                      ((1.0 - n * s2) * std::sqrt(1.0 - k * k * s2));
             },
             0.0, phi)
      .value;
}

}  // namespace

TEST_CASE("first kind, trivial values") {
  REQUIRE(ellip_f(0.7, 0.0) == Catch::Approx(0.7).epsilon(1e-15));
  REQUIRE(ellip_f(kPiHalf, 0.0) == Catch::Approx(kPiHalf).epsilon(1e-15));
  REQUIRE(ellip_f(0.0, 0.5) == 0.0);
}

TEST_CASE("first kind against the defining integral") {
  const double amp = std::asin(std::sqrt(2.0 - kSqrt3));
  const double k = 1.0 / kSqrt3;
  const double v = ellip_f(amp, k);
  REQUIRE(v == Catch::Approx(f_by_quadrature(amp, k)).margin(1e-12));
  // frozen from the oracle above
  REQUIRE(v == Catch::Approx(0.55288598040574421).margin(1e-13));
}

TEST_CASE("third kind, trivial values") {
  REQUIRE(ellip_pi(0.8, 0.0, 0.3) ==
          Catch::Approx(ellip_f(0.8, 0.3)).epsilon(1e-15));
  REQUIRE(ellip_pi(kPiHalf, 0.0, 0.0) == Catch::Approx(kPiHalf).epsilon(1e-15));
}

TEST_CASE("third kind against the defining integral") {
  const double n = 2.0 - kSqrt3;
  const double k = 1.0 / kSqrt3;
  const double v = complete_pi(n, k);
  REQUIRE(v == Catch::Approx(pi_by_quadrature(kPiHalf, n, k)).margin(1e-11));
  REQUIRE(v == Catch::Approx(2.0425980240710084).margin(1e-13));
}

TEST_CASE("complete integrals") {
  REQUIRE(complete_k(0.0) == Catch::Approx(kPiHalf).epsilon(1e-15));
  REQUIRE(complete_pi(0.0, 0.5) == Catch::Approx(complete_k(0.5)).epsilon(1e-15));
  // alpha^2 and kappa of the a=1 closed form at b = sqrt3
  const double v = complete_pi((2.0 + kSqrt3) / 4.0, 2.0 - kSqrt3);
  REQUIRE(v == Catch::Approx(pi_by_quadrature(kPiHalf, (2.0 + kSqrt3) / 4.0,
                                              2.0 - kSqrt3))
                   .margin(1e-10));
  REQUIRE(v == Catch::Approx(6.2510202630717617).margin(1e-12));
}

TEST_CASE("degenerate collapse: Pi(phi,0,0) = phi") {
  for (int i = 0; i <= 20; ++i) {
    const double phi = kPiHalf * i / 20.0;
    REQUIRE(std::fabs(ellip_pi(phi, 0.0, 0.0) - phi) <= 1e-15);
  }
}

TEST_CASE("F is strictly increasing in the amplitude") {
  const double k = 0.9;
  double prev = -1.0;
  for (int i = 1; i <= 40; ++i) {
    const double phi = kPiHalf * i / 40.0;
    const double v = ellip_f(phi, k);
    REQUIRE(v > prev);
    prev = v;
  }
}

TEST_CASE("Carlson reduction agrees with quadrature on random arguments") {
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> uphi(0.05, kPiHalf);
  std::uniform_real_distribution<double> unit(0.0, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    const double phi = uphi(rng);
    const double k = unit(rng);
    const double n = unit(rng);
    const double got = ellip_pi(phi, n, k);
    const double want = pi_by_quadrature(phi, n, k);
    REQUIRE(std::fabs(got - want) <= 1e-10);
  }
}

TEST_CASE("domain errors") {
  REQUIRE_THROWS_AS(ellip_f(-0.1, 0.5), std::domain_error);
  REQUIRE_THROWS_AS(ellip_f(2.0, 0.5), std::domain_error);
  REQUIRE_THROWS_AS(ellip_f(0.5, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(ellip_f(0.5, -0.1), std::domain_error);
  REQUIRE_THROWS_AS(ellip_pi(0.5, 1.0, 0.5), std::domain_error);
  REQUIRE_THROWS_AS(ellip_pi(0.5, -0.1, 0.5), std::domain_error);
  REQUIRE_THROWS_AS(complete_k(1.0), std::domain_error);
  REQUIRE_THROWS_AS(complete_pi(1.0, 0.5), std::domain_error);
}
