#include "h3sep/geometry.hpp"

#include <numbers>
#include <string>

#include "h3sep/errors.hpp"

namespace h3sep {

Geometry::Geometry(double r, double alpha) : r_(r), alpha_(alpha) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("Geometry: r must be finite and non-negative, got " + std::to_string(r));
  }
  // Accept pi/2 up to a rounding of the caller's own pi.
  if (!(alpha > 0.0 && alpha <= std::numbers::pi / 2.0 + 1e-15)) {
    throw DomainError("Geometry: alpha must lie in (0, pi/2], got " + std::to_string(alpha));
  }
}

}  // namespace h3sep
