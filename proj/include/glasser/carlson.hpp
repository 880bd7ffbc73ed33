#pragma once

// Carlson symmetric elliptic integrals RF, RC, RJ, RD in binary64.
//
//   R_F(x,y,z)   = 1/2 \int_0^inf dt / sqrt((t+x)(t+y)(t+z))
//   R_C(x,y)     = R_F(x,y,y)
//   R_J(x,y,z,p) = 3/2 \int_0^inf dt / ((t+p) sqrt((t+x)(t+y)(t+z)))
//   R_D(x,y,z)   = R_J(x,y,z,z)
//
// Evaluated by the duplication-theorem iteration with a truncated Taylor
// tail (Carlson, Numerical Algorithms 10, 13-26 (1995)).  Arguments must
// be finite and nonnegative, at most one of x,y,z zero, and p > 0;
// principal-value branches are rejected.

#include <cmath>
#include <stdexcept>
#include <string>

namespace glasser {

namespace detail {

// Spread threshold for the duplication loop.  The series tail error
// scales as spread^6, so 1e-3 leaves the result at roundoff level.
inline constexpr double kCarlsonSpread = 1e-3;
inline constexpr int kCarlsonMaxIter = 200;

inline void require_finite_nonneg(double v, const char* name) {
  if (!std::isfinite(v) || v < 0) {
    throw std::domain_error(std::string("carlson: argument ") + name +
                            " must be finite and nonnegative");
  }
}

inline void require_at_most_one_zero(double x, double y, double z) {
  if ((x == 0) + (y == 0) + (z == 0) > 1) {
    throw std::domain_error("carlson: at most one of x,y,z may be zero");
  }
}

}  // namespace detail

inline double rf(double x, double y, double z) {
  detail::require_finite_nonneg(x, "x");
  detail::require_finite_nonneg(y, "y");
  detail::require_finite_nonneg(z, "z");
  detail::require_at_most_one_zero(x, y, z);

  double xt = x, yt = y, zt = z;
  double mu = 0, dx = 0, dy = 0, dz = 0;
  int iter = 0;
  for (;;) {
    mu = (xt + yt + zt) / 3.0;
    dx = (mu - xt) / mu;
    dy = (mu - yt) / mu;
    dz = (mu - zt) / mu;
    if (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) <
        detail::kCarlsonSpread) {
      break;
    }
    if (++iter > detail::kCarlsonMaxIter) {
      throw std::runtime_error("carlson: rf duplication failed to converge");
    }
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + e2 * (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) + e3 / 14.0) /
         std::sqrt(mu);
}

inline double rc(double x, double y) {
  detail::require_finite_nonneg(x, "x");
  if (!std::isfinite(y) || y <= 0) {
    throw std::domain_error("carlson: rc requires y > 0");
  }
  double xt = x, yt = y;
  double mu = 0, s = 0;
  int iter = 0;
  for (;;) {
    mu = (xt + 2.0 * yt) / 3.0;
    s = (yt - xt) / (3.0 * mu);
    if (std::fabs(s) < detail::kCarlsonSpread) break;
    if (++iter > detail::kCarlsonMaxIter) {
      throw std::runtime_error("carlson: rc duplication failed to converge");
    }
    const double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
  }
  const double tail =
      1.0 + s * s * (0.3 + s * (1.0 / 7.0 +
                                s * (0.375 + s * (9.0 / 22.0 +
                                                  s * (159.0 / 208.0 +
                                                       s * 9.0 / 8.0)))));
  return tail / std::sqrt(mu);
}

inline double rj(double x, double y, double z, double p) {
  detail::require_finite_nonneg(x, "x");
  detail::require_finite_nonneg(y, "y");
  detail::require_finite_nonneg(z, "z");
  detail::require_at_most_one_zero(x, y, z);
  if (!std::isfinite(p) || p <= 0) {
    throw std::domain_error("carlson: rj requires p > 0");
  }

  double xt = x, yt = y, zt = z, pt = p;
  double sum = 0, fac = 1.0;
  double mu = 0, dx = 0, dy = 0, dz = 0, dp = 0;
  int iter = 0;
  for (;;) {
    mu = 0.2 * (xt + yt + zt + 2.0 * pt);
    dx = (mu - xt) / mu;
    dy = (mu - yt) / mu;
    dz = (mu - zt) / mu;
    dp = (mu - pt) / mu;
    if (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz),
                  std::fabs(dp)}) < detail::kCarlsonSpread) {
      break;
    }
    if (++iter > detail::kCarlsonMaxIter) {
      throw std::runtime_error("carlson: rj duplication failed to converge");
    }
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    const double alpha = pt * (sx + sy + sz) + sx * sy * sz;
    const double beta = std::sqrt(pt) * (pt + lam);
    sum += fac * rc(alpha * alpha, beta * beta);
    fac *= 0.25;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    pt = 0.25 * (pt + lam);
  }
  const double ea = dx * (dy + dz) + dy * dz;
  const double eb = dx * dy * dz;
  const double ec = dp * dp;
  const double ed = ea - 3.0 * ec;
  const double ee = eb + 2.0 * dp * (ea - ec);
  constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 3.0, c3 = 3.0 / 22.0,
                   c4 = 3.0 / 26.0;
  const double tail =
      1.0 + ed * (-c1 + 0.75 * c1 * ed - 1.5 * c4 * ee) +
      eb * (0.5 * c2 + dp * (-c3 - c3 + dp * c4)) +
      dp * ea * (c2 - dp * c3) - c2 * dp * ec;
  return 3.0 * sum + fac * tail / (mu * std::sqrt(mu));
}

inline double rd(double x, double y, double z) {
  if (!std::isfinite(z) || z <= 0) {
    throw std::domain_error("carlson: rd requires z > 0");
  }
  return rj(x, y, z, z);
}

}  // namespace glasser
