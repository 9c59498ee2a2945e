#pragma once

// Momentum-space hydrogen 1s/2s orbitals and their projector form factors.
// Internal: shared by the closed-form code's tests and the quadrature oracle.

#include <cmath>
#include <numbers>

namespace h3sep::detail {

inline double phi0_hat(double k) {
  const double a = k * k + 1.0;
  return 8.0 * std::sqrt(std::numbers::pi) / (a * a);
}

inline double phi1_hat(double k) {
  const double a = 4.0 * k * k + 1.0;
  return 32.0 * std::sqrt(2.0 * std::numbers::pi) * (4.0 * k * k - 1.0) / (a * a * a);
}

inline double v0_hat(double k) { return 8.0 * std::sqrt(std::numbers::pi) / (k * k + 1.0); }

inline double v1_hat(double k) {
  const double a = 4.0 * k * k + 1.0;
  return 8.0 * std::sqrt(2.0 * std::numbers::pi) * (4.0 * k * k - 1.0) / (a * a);
}

/// Spherical Bessel j0(s) = sin(s)/s.
inline double sinc(double s) {
  if (std::abs(s) < 1e-4) return 1.0 - s * s / 6.0;
  return std::sin(s) / s;
}

}  // namespace h3sep::detail
