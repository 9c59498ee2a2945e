#pragma once

#include "h3sep/geometry.hpp"

namespace h3sep {

/// One-center overlap integral of the 1s projector at eps = x^2:
/// 2 (3 + x) / (1 + x)^3. Equals 1 exactly at the hydrogen ground state x = 1.
double i0(double x);

/// I0(1 + h) - 1 = -h (10 + 6h + h^2) / (2 + h)^3, accurate for tiny h.
/// Requires h > -1.
double i0_deficit(double h);

/// Two-center overlap integral for centers a distance d apart,
///
///   f(d, x) = 16/(x^2-1)^2 * { (e^-d - e^-dx) / (d (x^2-1))
///                              + e^-d [x^2 - 5 + d (x^2-1)] / 8 }.
///
/// The closed form is 0/0 at x = 1 and d = 0; both limits are evaluated by
/// series so the result stays accurate in their neighbourhoods.
/// f(0, x) == i0(x). Throws DomainError unless d >= 0 and x > 0.
double f_overlap(double d, double x);

/// The integrals entering the three-center consistency equations.
struct IntegralSet {
  double x;
  double i0;     ///< same-center
  double iplus;  ///< origin to R+ (equal to origin to R-); independent of alpha
  double i1;     ///< R+ to R-
};

IntegralSet integral_set(const Geometry& geom, double x);

}  // namespace h3sep
