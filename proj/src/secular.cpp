#include "h3sep/secular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "h3sep/errors.hpp"
#include "h3sep/roots.hpp"

namespace h3sep {

namespace {

constexpr double kLambdaResidual = 1e-8;
// Inside this distance of x = 1 the root is re-solved in h = x - 1.
constexpr double kUnitOffsetWindow = 1e-3;

void require_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-8)) {
    throw DomainError("root tolerance must lie in (0, 1e-8], got " + std::to_string(tol));
  }
}

// The symmetric factor is a quadratic in a = I0 - 1,
//   a^2 + a I1 - 2 I+^2 = (a - a_hi)(a - a_lo),  a_lo <= a_hi.
// Since I0 decreases with x, its largest root lies on the lower branch
// a = a_lo. Scanning a - a_lo keeps that root simple even when the two
// branches pinch together (large R), where the product barely changes sign.
double lower_branch_a(const IntegralSet& s) {
  return -0.5 * (s.i1 + std::sqrt(s.i1 * s.i1 + 8.0 * s.iplus * s.iplus));
}

// Lower-branch condition as a function of h = x - 1.
double lower_branch(const Geometry& geom, double h) {
  const IntegralSet s = integral_set(geom, 1.0 + h);
  return i0_deficit(h) - lower_branch_a(s);
}

double antisymmetric_factor(const Geometry& geom, double h) {
  const IntegralSet s = integral_set(geom, 1.0 + h);
  return i0_deficit(h) - s.i1;
}

// Roots in h = x - 1, ascending. Roots close to h = 0 are bisected on to full
// relative precision, which x itself cannot hold.
template <class F>
std::vector<double> offset_roots(const F& f, double tol) {
  auto roots = scan_roots(f, kRootScanMin - 1.0, kRootScanMax - 1.0, kRootScanStep, tol,
                          0.1 * kRootResidual);
  for (double& h : roots) {
    if (std::abs(h) >= kUnitOffsetWindow) continue;
    double lo = h - tol;
    double hi = h + tol;
    while ((f(lo) < 0.0) == (f(hi) < 0.0) && hi - lo < 2.0 * kRootScanStep) {
      lo -= tol;
      hi += tol;
    }
    h = bisect(f, lo, hi, 0.0, 0.0);
  }
  return roots;
}

SecularRoot checked_root(const Geometry& geom, Factor factor, double h) {
  const double x = 1.0 + h;
  const double residual = factor_value(geom, factor, x);
  if (!(std::abs(residual) < kRootResidual)) {
    throw InconsistencyError("secular root at x=" + std::to_string(x) + " leaves residual " +
                             std::to_string(residual));
  }
  return SecularRoot{x, x * x, factor, h};
}

}  // namespace

SecularFactors secular_factors(const Geometry& geom, double x) {
  const IntegralSet s = integral_set(geom, x);
  const double a = s.i0 - 1.0;
  return SecularFactors{a - s.i1, a * a + a * s.i1 - 2.0 * s.iplus * s.iplus};
}

double factor_value(const Geometry& geom, Factor factor, double x) {
  const SecularFactors f = secular_factors(geom, x);
  return factor == Factor::Symmetric ? f.symmetric : f.antisymmetric;
}

SecularRoot ground_state_root(const Geometry& geom, double tol) {
  require_tol(tol);
  const auto roots = offset_roots([&](double h) { return lower_branch(geom, h); }, tol);
  if (roots.empty()) {
    throw NoBoundState("no symmetric bound state for R=" + std::to_string(geom.r()) +
                       ", alpha=" + std::to_string(geom.alpha()));
  }
  return checked_root(geom, Factor::Symmetric, roots.back());
}

std::optional<SecularRoot> excited_root(const Geometry& geom, double tol) {
  require_tol(tol);
  const auto roots = offset_roots([&](double h) { return antisymmetric_factor(geom, h); }, tol);
  if (roots.empty()) return std::nullopt;
  return checked_root(geom, Factor::Antisymmetric, roots.back());
}

double symmetric_mixing(const IntegralSet& s) { return -lower_branch_a(s) / (2.0 * s.iplus); }

LambdaVector consistency_residual(const IntegralSet& s, const LambdaVector& l) {
  return LambdaVector{
      s.i0 * l.l0 + s.iplus * (l.lplus + l.lminus) - l.l0,
      s.iplus * l.l0 + s.i0 * l.lplus + s.i1 * l.lminus - l.lplus,
      s.iplus * l.l0 + s.i1 * l.lplus + s.i0 * l.lminus - l.lminus,
  };
}

LambdaVector lambda_vector(const Geometry& geom, const SecularRoot& root) {
  const IntegralSet s = integral_set(geom, root.x);
  LambdaVector l{};
  if (root.factor == Factor::Antisymmetric) {
    l = LambdaVector{0.0, 1.0, -1.0};
  } else {
    const double mixing = symmetric_mixing(s);
    l = LambdaVector{1.0, mixing, mixing};
  }
  const LambdaVector res = consistency_residual(s, l);
  const double worst = std::max({std::abs(res.l0), std::abs(res.lplus), std::abs(res.lminus)});
  if (!(worst <= kLambdaResidual)) {
    throw InconsistencyError("consistency residual " + std::to_string(worst) + " at x=" +
                             std::to_string(root.x));
  }
  return l;
}

}  // namespace h3sep
