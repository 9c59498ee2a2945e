#include "h3sep/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "h3sep/errors.hpp"

namespace h3sep {

namespace {

constexpr double kYukawaLimit = 1e-8;
constexpr double kNormConvergence = 1e-8;

void check_params(const PsiParams& p) {
  if (!(p.x > 0.0)) throw DomainError("psi: x must be positive");
  if (!(std::abs((1.0 + p.x_minus_one) - p.x) <= 4e-16 * p.x)) {
    throw DomainError("psi: x_minus_one inconsistent with x");
  }
  if (!std::isfinite(p.mixing)) throw DomainError("psi: mixing coefficient is not finite");
  if (!(p.norm > 0.0) || !std::isfinite(p.norm)) throw DomainError("psi: norm must be positive");
}

}  // namespace

double yukawa_difference(double s, double x_minus_one) {
  if (s < kYukawaLimit) return x_minus_one;
  return -std::exp(-s) * std::expm1(-x_minus_one * s) / s;
}

double rho_pm(double r, double theta, double phi, const Geometry& geom, int sign) {
  if (!(r >= 0.0)) throw DomainError("rho_pm: r must be non-negative");
  const double big_r = geom.r();
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double proj = std::sin(theta) * std::cos(phi) * std::cos(geom.alpha()) +
                      s * std::cos(theta) * std::sin(geom.alpha());
  const double radicand = r * r + big_r * big_r - 2.0 * r * big_r * proj;
  return std::sqrt(std::max(radicand, 0.0));
}

PsiParams raw_params(const Geometry& geom, const SecularRoot& root) {
  if (root.factor != Factor::Symmetric) {
    throw DomainError("wavefunction: only symmetric (ground-state) roots are supported");
  }
  const IntegralSet s = integral_set(geom, root.x);
  return PsiParams{geom, root.x, symmetric_mixing(s), 1.0, root.x_minus_one};
}

double psi(double r, double theta, double phi, const PsiParams& params) {
  check_params(params);
  const double rp = rho_pm(r, theta, phi, params.geom, +1);
  const double rm = rho_pm(r, theta, phi, params.geom, -1);
  const double h = params.x_minus_one;
  return params.norm * (yukawa_difference(r, h) +
                        params.mixing * (yukawa_difference(rp, h) + yukawa_difference(rm, h)));
}

double psi_at(const Vec3& point, const PsiParams& params) {
  const double h = params.x_minus_one;
  const double r0 = distance(point, params.geom.origin());
  const double rp = distance(point, params.geom.plus());
  const double rm = distance(point, params.geom.minus());
  return params.norm * (yukawa_difference(r0, h) +
                        params.mixing * (yukawa_difference(rp, h) + yukawa_difference(rm, h)));
}

double norm_integral(const PsiParams& params, const GridLevel& level) {
  check_params(params);
  const auto centers = params.geom.protons();
  const MolecularGrid grid(centers, level);
  return grid.integrate([&](const Vec3& p) {
    const double v = psi_at(p, params);
    return v * v;
  });
}

PsiParams normalize(const Geometry& geom, const SecularRoot& root) {
  PsiParams params = raw_params(geom, root);
  const double coarse = norm_integral(params, kNormCoarse);
  const double fine = norm_integral(params, kNormFine);
  if (!(fine > 0.0) || !std::isfinite(fine) ||
      std::abs(fine - coarse) > kNormConvergence * std::abs(fine)) {
    throw QuadratureFailure("normalize: norm integral not converged (coarse " +
                            std::to_string(coarse) + ", fine " + std::to_string(fine) + ")");
  }
  params.norm = 1.0 / std::sqrt(fine);
  return params;
}

AngularGrid psi_grid(double r_fixed, const PsiParams& params, std::size_t theta_count,
                     std::size_t phi_count) {
  if (!(r_fixed >= 0.0)) throw DomainError("psi_grid: radius must be non-negative");
  if (theta_count < 2 || phi_count < 2) throw DomainError("psi_grid: grid counts must be >= 2");
  check_params(params);

  AngularGrid grid;
  grid.r_fixed = r_fixed;
  grid.theta_count = theta_count;
  grid.phi_count = phi_count;
  grid.theta.resize(theta_count);
  grid.phi.resize(phi_count);
  const double dtheta = std::numbers::pi / static_cast<double>(theta_count);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(phi_count);
  for (std::size_t i = 0; i < theta_count; ++i) grid.theta[i] = (static_cast<double>(i) + 0.5) * dtheta;
  for (std::size_t j = 0; j < phi_count; ++j) grid.phi[j] = (static_cast<double>(j) + 0.5) * dphi;

  grid.values.resize(theta_count * phi_count);
  for (std::size_t i = 0; i < theta_count; ++i) {
    for (std::size_t j = 0; j < phi_count; ++j) {
      grid.values[i * phi_count + j] = psi(r_fixed, grid.theta[i], grid.phi[j], params);
    }
  }
  return grid;
}

AngularGrid psi_grid(double r_fixed, const Geometry& geom, const SecularRoot& root,
                     std::size_t theta_count, std::size_t phi_count) {
  return psi_grid(r_fixed, raw_params(geom, root), theta_count, phi_count);
}

}  // namespace h3sep
