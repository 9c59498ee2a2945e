#pragma once

#include <cstddef>
#include <vector>

#include "h3sep/geometry.hpp"
#include "h3sep/molecular_grid.hpp"
#include "h3sep/secular.hpp"

namespace h3sep {

/// Position-space ground state
///
///   psi(r) = norm * { g(|r|) + mixing * [g(rho+) + g(rho-)] },
///   g(s)   = (e^-s - e^-xs) / s,   rho+- = |r - R+-|,
///
/// with mixing = (1 - I0) / (2 I+) taken from the symmetric root.
struct PsiParams {
  Geometry geom;
  double x;
  double mixing;
  double norm;  ///< 1 in raw mode
  double x_minus_one;
};

/// Theta-major samples of psi on a sphere of radius r_fixed.
struct AngularGrid {
  double r_fixed;
  std::size_t theta_count;
  std::size_t phi_count;
  std::vector<double> theta;   ///< theta_count midpoints on (0, pi)
  std::vector<double> phi;     ///< phi_count midpoints on (0, 2 pi)
  std::vector<double> values;  ///< values[i * phi_count + j] = psi(r_fixed, theta[i], phi[j])

  double at(std::size_t i, std::size_t j) const { return values[i * phi_count + j]; }
};

/// Distance from (r, theta, phi) to R+ (sign = +1) or R- (sign = -1).
double rho_pm(double r, double theta, double phi, const Geometry& geom, int sign);

/// (e^-s - e^-xs) / s for x = 1 + x_minus_one, with the limit x - 1 for
/// s < 1e-8.
double yukawa_difference(double s, double x_minus_one);

/// Raw (norm = 1) parameters for a symmetric root. Throws DomainError for
/// antisymmetric roots.
PsiParams raw_params(const Geometry& geom, const SecularRoot& root);

double psi(double r, double theta, double phi, const PsiParams& params);
double psi_at(const Vec3& point, const PsiParams& params);

/// Grid levels used for normalization; the coarse result gates convergence.
inline constexpr GridLevel kNormCoarse{72, 36, 72};
inline constexpr GridLevel kNormFine{110, 52, 104};

/// Parameters with norm chosen so that the integral of psi^2 over all space is
/// one. Throws QuadratureFailure if the coarse and fine grid estimates of the
/// norm integral differ by more than 1e-8 relative.
PsiParams normalize(const Geometry& geom, const SecularRoot& root);

/// Integral of psi^2 over all space for the given parameters.
double norm_integral(const PsiParams& params, const GridLevel& level);

/// Samples psi on a theta_count x phi_count midpoint grid over the sphere of
/// radius r_fixed. Requires both counts >= 2.
AngularGrid psi_grid(double r_fixed, const PsiParams& params, std::size_t theta_count,
                     std::size_t phi_count);

/// Raw-mode grid for a symmetric root.
AngularGrid psi_grid(double r_fixed, const Geometry& geom, const SecularRoot& root,
                     std::size_t theta_count, std::size_t phi_count);

}  // namespace h3sep
