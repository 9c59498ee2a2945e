#pragma once

#include <array>
#include <cmath>

namespace h3sep {

using Vec3 = std::array<double, 3>;

inline double distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Isosceles three-proton configuration.
///
/// One proton sits at the origin, the other two at
///   R+ = r (cos alpha, 0,  sin alpha)
///   R- = r (cos alpha, 0, -sin alpha)
/// so both legs have length r and the base is 2 r sin(alpha). alpha = pi/2 is
/// the linear chain, alpha = pi/6 the equilateral triangle.
///
/// Lengths are in Bohr radii. Energies throughout the library are in Rydberg
/// (hbar = 2m = e^2/2 = 1); nothing converts units internally.
class Geometry {
 public:
  /// Throws DomainError unless r >= 0 and 0 < alpha <= pi/2.
  Geometry(double r, double alpha);

  double r() const { return r_; }
  double alpha() const { return alpha_; }

  Vec3 plus() const { return {r_ * std::cos(alpha_), 0.0, r_ * std::sin(alpha_)}; }
  Vec3 minus() const { return {r_ * std::cos(alpha_), 0.0, -r_ * std::sin(alpha_)}; }
  Vec3 origin() const { return {0.0, 0.0, 0.0}; }

  /// |R+ - R-| = 2 r sin(alpha).
  double base_length() const { return 2.0 * r_ * std::sin(alpha_); }

  /// Proton positions in the order (origin, R+, R-).
  std::array<Vec3, 3> protons() const { return {origin(), plus(), minus()}; }

 private:
  double r_;
  double alpha_;
};

}  // namespace h3sep
