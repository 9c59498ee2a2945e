#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace h3sep {

/// Bisection on a bracket [lo, hi] with f(lo) and f(hi) of opposite sign.
///
/// Stops once the bracket is narrower than tol and |f(mid)| <= residual_tol,
/// or when the bracket can no longer be split in double precision.
template <class F>
double bisect(const F& f, double lo, double hi, double tol, double residual_tol = 0.0) {
  double f_lo = f(lo);
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (hi - lo < tol && std::abs(f_mid) <= residual_tol) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

/// Scans [lo, hi] on a uniform grid of spacing `step`, refines every sign
/// change by bisection and returns the roots in ascending order. Grid points
/// where f vanishes exactly are reported as roots themselves.
template <class F>
std::vector<double> scan_roots(const F& f, double lo, double hi, double step, double tol,
                               double residual_tol = 0.0) {
  std::vector<double> roots;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  double x_prev = lo;
  double f_prev = f(x_prev);
  if (f_prev == 0.0) roots.push_back(x_prev);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + static_cast<double>(i) * step;
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && ((fx < 0.0) != (f_prev < 0.0))) {
      roots.push_back(bisect(f, x_prev, x, tol, residual_tol));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

}  // namespace h3sep
