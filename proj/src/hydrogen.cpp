#include "h3sep/hydrogen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "h3sep/errors.hpp"
#include "h3sep/roots.hpp"

namespace h3sep::hydrogen {

namespace {

constexpr double kScanStep = 1e-3;
// Amplitudes below this (after unit normalization) count as exactly zero.
constexpr double kPureThreshold = 1e-8;

void require_positive(double x) {
  if (!(x > 0.0)) throw DomainError("hydrogen: x must be positive, got " + std::to_string(x));
}

}  // namespace

AMatrix2 a_matrix(double x) {
  require_positive(x);
  const double s2 = std::numbers::sqrt2;
  const double p1 = 1.0 + x;
  const double p2 = 1.0 + 2.0 * x;
  const double p2_2 = p2 * p2;
  const double p2_3 = p2_2 * p2;
  AMatrix2 a{};
  a.a00 = 2.0 * (3.0 + x) / (p1 * p1 * p1);
  a.a11 = 2.0 * (((8.0 * x + 20.0) * x + 6.0) * x + 7.0) / (p2_3 * p2_2);
  a.a10 = 32.0 * s2 / 27.0 * ((2.0 * x + 5.0) * x - 7.0) / (p1 * p2_3);
  a.a01 = 8.0 * s2 / 27.0 * ((4.0 * x + 12.0) * x - 7.0) / (p1 * p1 * p2_2);
  return a;
}

double secular_det(double x) {
  const AMatrix2 a = a_matrix(x);
  return (a.a00 - 1.0) * (a.a11 - 1.0) - a.a01 * a.a10;
}

namespace {

HydrogenRoot make_root(double x) {
  const AMatrix2 a = a_matrix(x);
  // Each row of (A - I) gives a candidate null vector; use the better conditioned one.
  const double r0_norm = std::hypot(a.a00 - 1.0, a.a01);
  const double r1_norm = std::hypot(a.a10, a.a11 - 1.0);
  double l0 = 0.0;
  double l1 = 0.0;
  if (r0_norm >= r1_norm) {
    l0 = a.a01;
    l1 = 1.0 - a.a00;
  } else {
    l0 = 1.0 - a.a11;
    l1 = a.a10;
  }
  const double n = std::hypot(l0, l1);
  l0 /= n;
  l1 /= n;
  if (std::abs(l0) < kPureThreshold) l0 = 0.0;
  if (std::abs(l1) < kPureThreshold) l1 = 0.0;
  if ((std::abs(l0) >= std::abs(l1) ? l0 : l1) < 0.0) {
    l0 = -l0;
    l1 = -l1;
  }
  HydrogenRoot root{};
  root.x = x;
  root.lambda0 = l0;
  root.lambda1 = l1;
  if (l0 != 0.0) root.lambda_ratio = l1 / l0;
  root.pure_state = (l0 == 0.0 || l1 == 0.0);
  return root;
}

}  // namespace

std::vector<HydrogenRoot> find_hydrogen_roots(double x_max, double tol) {
  if (!(x_max >= 2.0)) throw DomainError("find_hydrogen_roots: x_max must be >= 2");
  if (!(tol > 0.0 && tol < 1e-6)) throw DomainError("find_hydrogen_roots: tol must lie in (0, 1e-6)");

  const auto xs = scan_roots(secular_det, kScanStep, x_max, kScanStep, tol);
  if (xs.size() != 2) {
    throw NoBoundState("find_hydrogen_roots: expected 2 sign changes, found " +
                       std::to_string(xs.size()));
  }
  std::vector<HydrogenRoot> roots;
  roots.reserve(xs.size());
  // Deepest level first.
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) roots.push_back(make_root(*it));
  return roots;
}

}  // namespace h3sep::hydrogen
