#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "glasser/carlson.hpp"
#include "glasser/quadrature.hpp"

using glasser::oracle_integrate;
using glasser::rc;
using glasser::rd;
using glasser::rf;
using glasser::rj;

namespace {

// Brute-force values of the defining integrals, computed by composite
// Simpson on desingularised substitutions (t = u^2 near zero, t = 1/v^2
// at infinity).  Independent of the duplication algorithm under test.
constexpr long kPanels = 1000000;

double oracle_rf_012() {
  // RF(0,1,2) = 1/2 int_0^inf dt / sqrt(t(t+1)(t+2))
  double head = oracle_integrate(
      [](double u) { return 1.0 / std::sqrt((u * u + 1.0) * (u * u + 2.0)); },
      0.0, 1.0, kPanels);
  double tail = oracle_integrate(
      [](double v) {
        return 1.0 / std::sqrt((1.0 + v * v) * (1.0 + 2.0 * v * v));
      },
      0.0, 1.0, kPanels);
  return head + tail;
}

double oracle_rc_23() {
  // RC(2,3) = 1/2 int_0^inf dt / ((t+3) sqrt(t+2)) = int_0^{1/sqrt2} dv/(1+v^2)
  return oracle_integrate([](double v) { return 1.0 / (1.0 + v * v); }, 0.0,
                          1.0 / std::sqrt(2.0), kPanels);
}

double oracle_rj_0111() {
  // 3/2 int_0^inf dt / ((t+1)^2 sqrt(t)) = 3 int_0^inf du / (u^2+1)^2
  auto f = [](double u) { return 1.0 / ((u * u + 1.0) * (u * u + 1.0)); };
  double head = oracle_integrate(f, 0.0, 1.0, kPanels);
  double tail = oracle_integrate(
      [](double v) {
        const double d = 1.0 + v * v;
        return v * v / (d * d);
      },
      0.0, 1.0, kPanels);
  return 3.0 * (head + tail);
}

double oracle_rj_0223() {
  // 3/2 int_0^inf dt / (sqrt(t)(t+2)(t+3)) = 3 int_0^inf du / ((u^2+2)(u^2+3))
  double head = oracle_integrate(
      [](double u) { return 1.0 / ((u * u + 2.0) * (u * u + 3.0)); }, 0.0, 1.0,
      kPanels);
  double tail = oracle_integrate(
      [](double v) {
        const double v2 = v * v;
        return v2 / ((1.0 + 2.0 * v2) * (1.0 + 3.0 * v2));
      },
      0.0, 1.0, kPanels);
  return 3.0 * (head + tail);
}

double oracle_rd_021() {
  // 3/2 int_0^inf dt / (sqrt(t(t+2)) (t+1)^{3/2})
  //   = 3 int_0^inf du / (sqrt(u^2+2) (u^2+1)^{3/2})
  double head = oracle_integrate(
      [](double u) {
        return 1.0 / (std::sqrt(u * u + 2.0) * std::pow(u * u + 1.0, 1.5));
      },
      0.0, 1.0, kPanels);
  double tail = oracle_integrate(
      [](double v) {
        const double v2 = v * v;
        return v2 / (std::sqrt(1.0 + 2.0 * v2) * std::pow(1.0 + v2, 1.5));
      },
      0.0, 1.0, kPanels);
  return 3.0 * (head + tail);
}

}  // namespace

TEST_CASE("rf trivial values") {
  REQUIRE(rf(1, 1, 1) == Catch::Approx(1.0).epsilon(1e-15));
  REQUIRE(rf(4, 4, 4) == Catch::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("rf against the defining integral") {
  REQUIRE(rf(0, 1, 2) == Catch::Approx(oracle_rf_012()).margin(1e-10));
}

TEST_CASE("rc values") {
  REQUIRE(rc(1, 1) == Catch::Approx(1.0).epsilon(1e-15));
  REQUIRE(rc(0, 1) == Catch::Approx(1.5707963267948966).epsilon(1e-14));
  REQUIRE(rc(2, 3) == Catch::Approx(oracle_rc_23()).margin(1e-10));
}

TEST_CASE("rj values") {
  REQUIRE(rj(1, 1, 1, 1) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(rj(0, 1, 1, 1) == Catch::Approx(oracle_rj_0111()).margin(1e-10));
  REQUIRE(rj(0, 2, 2, 3) == Catch::Approx(oracle_rj_0223()).margin(1e-10));
}

TEST_CASE("rd values") {
  REQUIRE(rd(1, 1, 1) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(rd(2, 3, 4) == Catch::Approx(rj(2, 3, 4, 4)).epsilon(1e-13));
  REQUIRE(rd(0, 2, 1) == Catch::Approx(oracle_rd_021()).margin(1e-10));
}

TEST_CASE("rf permutation symmetry") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(0.01, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = dist(rng), y = dist(rng), z = dist(rng);
    const double base = rf(x, y, z);
    for (double v : {rf(x, z, y), rf(y, x, z), rf(y, z, x), rf(z, x, y),
                     rf(z, y, x)}) {
      REQUIRE(std::fabs(v - base) <= 1e-14 * std::fabs(base));
    }
  }
}

TEST_CASE("homogeneity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> arg(0.05, 10.0);
  std::uniform_real_distribution<double> lam(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = arg(rng), y = arg(rng), z = arg(rng), p = arg(rng);
    const double t = lam(rng);
    REQUIRE(rf(t * x, t * y, t * z) ==
            Catch::Approx(rf(x, y, z) / std::sqrt(t)).epsilon(1e-13));
    REQUIRE(rj(t * x, t * y, t * z, t * p) ==
            Catch::Approx(rj(x, y, z, p) / (t * std::sqrt(t))).epsilon(1e-13));
  }
}

TEST_CASE("one manual duplication step reproduces rf") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> arg(0.1, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = arg(rng), y = arg(rng), z = arg(rng);
    const double lam = std::sqrt(x) * (std::sqrt(y) + std::sqrt(z)) +
                       std::sqrt(y) * std::sqrt(z);
    const double dup = rf(0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam));
    REQUIRE(dup == Catch::Approx(rf(x, y, z)).epsilon(1e-13));
  }
}

TEST_CASE("rc is the degenerate rf") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> arg(0.01, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = arg(rng), y = arg(rng);
    REQUIRE(rc(x, y) == Catch::Approx(rf(x, y, y)).epsilon(1e-14));
  }
}

TEST_CASE("domain errors") {
  REQUIRE_THROWS_AS(rf(-1, 1, 1), std::domain_error);
  REQUIRE_THROWS_AS(rf(0, 0, 1), std::domain_error);
  REQUIRE_THROWS_AS(rc(1, 0), std::domain_error);
  REQUIRE_THROWS_AS(rc(1, -2), std::domain_error);
  REQUIRE_THROWS_AS(rj(1, 1, 1, 0), std::domain_error);
  REQUIRE_THROWS_AS(rj(1, 1, 1, -1), std::domain_error);
  REQUIRE_THROWS_AS(rj(0, 0, 1, 1), std::domain_error);
  const double inf = std::numeric_limits<double>::infinity();
  REQUIRE_THROWS_AS(rf(inf, 1, 1), std::domain_error);
}
