#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "h3sep/geometry.hpp"

namespace h3sep {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(std::size_t n);

/// Point counts per atomic sub-grid.
struct GridLevel {
  std::size_t radial = 80;
  std::size_t theta = 40;
  std::size_t phi = 80;
};

/// Fuzzy-cell (Becke style) multi-center integration grid over all of R^3.
///
/// Each distinct center carries a spherical product grid (mapped radial
/// Gauss-Legendre, Gauss-Legendre in cos(theta), trapezoid in phi). Cusps of
/// integrands at the centers sit at the origin of their own sub-grid, where
/// they are harmless, and are suppressed on every other sub-grid by the
/// partition weights.
class MolecularGrid {
 public:
  /// Centers closer than 1e-12 are merged.
  MolecularGrid(std::span<const Vec3> centers, const GridLevel& level);

  std::size_t size() const { return weights_.size(); }
  const std::vector<Vec3>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  double integrate(const F& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) sum += weights_[i] * f(points_[i]);
    return sum;
  }

 private:
  std::vector<Vec3> points_;
  std::vector<double> weights_;
};

}  // namespace h3sep
