#include "h3sep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "h3sep/detail/momentum.hpp"
#include "h3sep/errors.hpp"
#include "h3sep/molecular_grid.hpp"

namespace h3sep::oracle {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kRelTol = 1e-13;
constexpr double kTargetAbs = 1e-10;
constexpr double kTailStart = 100.0;
constexpr unsigned kMaxDepth = 15;
// The tail contributes ~1e-9 of the total; its own relative accuracy barely matters.
constexpr unsigned kTailDepth = 6;

// Projection grids; the coarse level only provides the error estimate.
constexpr GridLevel kProjectionCoarse{72, 36, 72};
constexpr GridLevel kProjectionFine{110, 52, 104};
constexpr double kProjectionRelTol = 1e-7;

// int_0^inf f(k) dk over panels [0, scales..., kTailStart] plus a mapped tail.
// When `osc` > 4 the finite part is cut into panels of length pi / osc.
template <class F>
QuadratureResult radial(const F& f, std::vector<double> breaks, double osc) {
  std::size_t evals = 0;
  const auto counted = [&](double k) {
    ++evals;
    return f(k);
  };
  breaks.push_back(0.0);
  breaks.push_back(kTailStart);
  if (osc > 4.0) {
    const double panel = std::numbers::pi / osc;
    for (double k = panel; k < kTailStart; k += panel) breaks.push_back(k);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double value = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double e = 0.0;
    double l = 0.0;
    value += gauss_kronrod<double, 61>::integrate(counted, breaks[i], breaks[i + 1], kMaxDepth,
                                                  kRelTol, &e, &l);
    err += e;
    l1 += l;
  }
  double e = 0.0;
  double l = 0.0;
  value += gauss_kronrod<double, 61>::integrate(counted, kTailStart,
                                                std::numeric_limits<double>::infinity(), kTailDepth,
                                                kRelTol, &e, &l);
  err += e;
  l1 += l;
  // Kronrod estimates collapse to zero on smooth panels; keep a rounding floor.
  err = std::max(err, 64.0 * std::numeric_limits<double>::epsilon() * l1);
  if (!std::isfinite(value) || err > kTargetAbs * std::max(1.0, std::abs(value))) {
    throw QuadratureFailure("radial quadrature: value " + std::to_string(value) +
                            ", error estimate " + std::to_string(err) + " after " +
                            std::to_string(evals) + " evaluations");
  }
  return QuadratureResult{value, err, evals};
}

void require_x(double x) {
  if (!(x > 0.0)) throw DomainError("oracle: x must be positive");
}

}  // namespace

QuadratureResult i_integral(double d, double x) {
  require_x(x);
  if (!(d >= 0.0)) throw DomainError("oracle: d must be non-negative");
  const double pref = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
  const auto f = [=](double k) {
    return pref * k * k * detail::phi0_hat(k) * detail::v0_hat(k) * detail::sinc(k * d) /
           (k * k + x * x);
  };
  return radial(f, {std::min(1.0, x), std::max(1.0, x)}, d);
}

QuadratureResult a_entry(int q, int m, double x) {
  require_x(x);
  if ((q != 0 && q != 1) || (m != 0 && m != 1)) throw DomainError("oracle: level index must be 0 or 1");
  const double pref = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
  const auto f = [=](double k) {
    const double phi = q == 0 ? detail::phi0_hat(k) : detail::phi1_hat(k);
    const double v = m == 0 ? detail::v0_hat(k) : detail::v1_hat(k);
    return pref * k * k * phi * v / (k * k + x * x);
  };
  return radial(f, {0.5, std::min(1.0, x), std::max(1.0, x)}, 0.0);
}

QuadratureResult lambda_projection(const PsiParams& params, Center which) {
  const Geometry& g = params.geom;
  const Vec3 c = which == Center::Origin ? g.origin() : which == Center::Plus ? g.plus() : g.minus();
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const auto integrand = [&](const Vec3& p) {
    return inv_sqrt_pi * std::exp(-distance(p, c)) * psi_at(p, params);
  };
  const auto centers = g.protons();
  const MolecularGrid coarse_grid(centers, kProjectionCoarse);
  const MolecularGrid fine_grid(centers, kProjectionFine);
  const double coarse = coarse_grid.integrate(integrand);
  const double fine = fine_grid.integrate(integrand);
  const double err = std::abs(fine - coarse);
  if (!std::isfinite(fine) || err > kProjectionRelTol * std::max(std::abs(fine), 1e-12)) {
    throw QuadratureFailure("lambda_projection: grid estimates " + std::to_string(coarse) + " and " +
                            std::to_string(fine) + " disagree");
  }
  return QuadratureResult{fine, err, coarse_grid.size() + fine_grid.size()};
}

QuadratureResult psi_norm_momentum(const PsiParams& params) {
  const double x = params.x;
  const double m = params.mixing;
  const double r = params.geom.r();
  const double b = params.geom.base_length();
  const double pref = params.norm * params.norm / (2.0 * std::numbers::pi * std::numbers::pi);
  const double h = params.x_minus_one;
  const double scale = 4.0 * std::numbers::pi * h * (2.0 + h);
  const auto f = [=](double k) {
    const double k2 = k * k;
    const double g_hat = scale / ((k2 + 1.0) * (k2 + x * x));
    const double structure =
        1.0 + 2.0 * m * m + 4.0 * m * detail::sinc(k * r) + 2.0 * m * m * detail::sinc(k * b);
    return pref * k2 * g_hat * g_hat * structure;
  };
  return radial(f, {std::min(1.0, x), std::max(1.0, x)}, std::max(r, b));
}

}  // namespace h3sep::oracle
