#include "h3sep/integrals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "h3sep/errors.hpp"

namespace h3sep {

namespace {

// Below kSmallD the closed form is replaced by its small-d series. Near x = 1
// the closed form divides by (x^2 - 1)^3 and loses about eps / |x - 1|^3
// relative accuracy, so inside unit_x_window(d) it is replaced by its series
// in h = x - 1. The window shrinks with d because the series converges like
// (d h)^k / k!.
constexpr double kSmallD = 1e-6;
constexpr double kUnitXWindowCap = 0.02;
constexpr double kUnitXWindowScale = 0.3;

double unit_x_window(double d) { return std::min(kUnitXWindowCap, kUnitXWindowScale / d); }

// Coefficients of f(d, 1 + h) = e^-d * sum_k c_k(d) h^k, k = 0..8; the
// polynomial in d for c_k is p_k(d) / q_k with p_k listed from degree 0 up.
constexpr std::array<double, 11> kSeriesNum[9] = {
    {3, 3, 1},
    {-15, -15, -6, -1},
    {135, 135, 60, 15, 2},
    {-315, -315, -150, -45, -9, -1},
    {3150, 3150, 1575, 525, 126, 21, 2},
    {-8505, -8505, -4410, -1575, -420, -84, -12, -1},
    {99225, 99225, 52920, 19845, 5670, 1260, 216, 27, 2},
    {-311850, -311850, -170100, -66150, -19845, -4725, -900, -135, -15, -1},
    {4209975, 4209975, 2338875, 935550, 291060, 72765, 14850, 2475, 330, 33, 2},
};
constexpr double kSeriesDen[9] = {3, 12, 120, 360, 5040, 20160, 362880, 1814400, 39916800};

double f_near_unit_x(double d, double h) {
  double sum = 0.0;
  for (int k = 8; k >= 0; --k) {
    double c = 0.0;
    for (int j = 10; j >= 0; --j) c = c * d + kSeriesNum[k][j];
    sum = sum * h + c / kSeriesDen[k];
  }
  return std::exp(-d) * sum;
}

// f(d, x) = i0(x) - (3x + 1) / (3 (x + 1)^3) d^2 + O(d^4).
double f_small_d(double d, double x) {
  const double p = 1.0 + x;
  return i0(x) - (3.0 * x + 1.0) / (3.0 * p * p * p) * d * d;
}

}  // namespace

double i0(double x) {
  if (!(x > 0.0)) throw DomainError("i0: x must be positive, got " + std::to_string(x));
  const double p = 1.0 + x;
  return 2.0 * (3.0 + x) / (p * p * p);
}

double i0_deficit(double h) {
  if (!(h > -1.0)) throw DomainError("i0_deficit: need h > -1, got " + std::to_string(h));
  const double p = 2.0 + h;
  return -h * (10.0 + h * (6.0 + h)) / (p * p * p);
}

double f_overlap(double d, double x) {
  if (!(x > 0.0)) throw DomainError("f_overlap: x must be positive, got " + std::to_string(x));
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw DomainError("f_overlap: d must be finite and non-negative, got " + std::to_string(d));
  }
  if (d < kSmallD) return f_small_d(d, x);
  const double h = x - 1.0;
  if (std::abs(h) < unit_x_window(d)) return f_near_unit_x(d, h);

  const double s = x * x - 1.0;
  const double e = std::exp(-d);
  // e^-d - e^-dx without cancellation.
  const double diff = -e * std::expm1(-d * h);
  return 16.0 / (s * s) * (diff / (d * s) + 0.125 * e * (s - 4.0 + d * s));
}

IntegralSet integral_set(const Geometry& geom, double x) {
  IntegralSet set{};
  set.x = x;
  set.i0 = i0(x);
  set.iplus = f_overlap(geom.r(), x);
  set.i1 = f_overlap(geom.base_length(), x);
  return set;
}

}  // namespace h3sep
