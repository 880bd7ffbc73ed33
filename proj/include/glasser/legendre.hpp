#pragma once

// Legendre-convention incomplete and complete elliptic integrals of the
// first and third kind, reduced to Carlson symmetric forms.
//
//   F(phi, k)     = \int_0^phi dtheta / sqrt(1 - k^2 sin^2 theta)
//   Pi(phi, n, k) = \int_0^phi dtheta /
//                       ((1 - n sin^2 theta) sqrt(1 - k^2 sin^2 theta))
//
// The characteristic n enters with a minus sign in the pole factor
// (Byrd & Friedman convention) and the modulus is k itself, not k^2.

#include <cmath>
#include <stdexcept>

#include "glasser/carlson.hpp"

namespace glasser {

namespace detail {

inline void check_elliptic_args(double phi, double k, double n) {
  constexpr double pi_half_hi = 1.5707963267948967;  // pi/2 rounded up
  if (!(phi >= 0) || phi > pi_half_hi) {
    throw std::domain_error("legendre: amplitude must lie in [0, pi/2]");
  }
  if (!(k >= 0) || k >= 1) {
    throw std::domain_error("legendre: modulus must lie in [0, 1)");
  }
  if (!(n >= 0) || n >= 1) {
    throw std::domain_error("legendre: characteristic must lie in [0, 1)");
  }
  const double s = std::sin(phi);
  if (n * s * s >= 1) {
    throw std::domain_error("legendre: characteristic pole inside amplitude range");
  }
}

}  // namespace detail

inline double ellip_f(double phi, double k) {
  detail::check_elliptic_args(phi, k, 0.0);
  const double s = std::sin(phi), c = std::cos(phi);
  if (s == 0) return 0.0;
  return s * rf(c * c, 1.0 - k * k * s * s, 1.0);
}

inline double ellip_pi(double phi, double n, double k) {
  detail::check_elliptic_args(phi, k, n);
  const double s = std::sin(phi), c = std::cos(phi);
  if (s == 0) return 0.0;
  const double s2 = s * s;
  const double kc = 1.0 - k * k * s2;
  double value = s * rf(c * c, kc, 1.0);
  if (n != 0) {
    value += (n / 3.0) * s2 * s * rj(c * c, kc, 1.0, 1.0 - n * s2);
  }
  return value;
}

inline double complete_k(double k) {
  return ellip_f(1.5707963267948966, k);
}

inline double complete_pi(double n, double k) {
  return ellip_pi(1.5707963267948966, n, k);
}

}  // namespace glasser
