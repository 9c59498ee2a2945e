#include "h3sep/molecular_grid.hpp"

#include <cmath>
#include <numbers>

#include "h3sep/errors.hpp"

namespace h3sep {

GaussLegendre gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre: n must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * z * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = nd * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    gl.nodes[i] = -z;
    gl.nodes[n - 1 - i] = z;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

namespace {

// Becke cell function on mu in [-1, 1]: 1 at mu = -1, 0 at mu = 1.
//
// The weight a sub-grid keeps near a foreign nucleus falls off as a power of
// (distance / separation), and each extra iteration raises that power. Widely
// separated pairs get one more iteration so that residue stays below what the
// foreign sub-grid can resolve.
double cell_step(double mu, double separation) {
  const int iterations = separation < 10.0 ? 4 : 5;
  for (int k = 0; k < iterations; ++k) mu = 1.5 * mu - 0.5 * mu * mu * mu;
  return 0.5 * (1.0 - mu);
}

std::vector<Vec3> distinct_centers(std::span<const Vec3> centers) {
  std::vector<Vec3> out;
  for (const Vec3& c : centers) {
    bool seen = false;
    for (const Vec3& o : out) seen = seen || distance(c, o) < 1e-12;
    if (!seen) out.push_back(c);
  }
  return out;
}

}  // namespace

MolecularGrid::MolecularGrid(std::span<const Vec3> centers, const GridLevel& level) {
  if (centers.empty()) throw DomainError("MolecularGrid: no centers");
  if (level.radial == 0 || level.theta == 0 || level.phi == 0) {
    throw DomainError("MolecularGrid: grid counts must be positive");
  }
  const std::vector<Vec3> atoms = distinct_centers(centers);
  const std::size_t na = atoms.size();

  const GaussLegendre radial = gauss_legendre(level.radial);
  const GaussLegendre polar = gauss_legendre(level.theta);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(level.phi);
  constexpr double kScale = 1.0;

  points_.reserve(na * level.radial * level.theta * level.phi);
  weights_.reserve(points_.capacity());

  std::vector<double> cell(na);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t ir = 0; ir < level.radial; ++ir) {
      const double t = radial.nodes[ir];
      const double r = kScale * (1.0 + t) / (1.0 - t);
      const double wr = radial.weights[ir] * r * r * 2.0 * kScale / ((1.0 - t) * (1.0 - t));
      for (std::size_t it = 0; it < level.theta; ++it) {
        const double u = polar.nodes[it];
        const double sin_t = std::sqrt(1.0 - u * u);
        for (std::size_t ip = 0; ip < level.phi; ++ip) {
          const double phi = dphi * static_cast<double>(ip);
          const Vec3 p{atoms[a][0] + r * sin_t * std::cos(phi), atoms[a][1] + r * sin_t * std::sin(phi),
                       atoms[a][2] + r * u};
          double partition = 1.0;
          if (na > 1) {
            double total = 0.0;
            for (std::size_t i = 0; i < na; ++i) {
              double prod = 1.0;
              const double ri = distance(p, atoms[i]);
              for (std::size_t j = 0; j < na; ++j) {
                if (j == i) continue;
                const double sep = distance(atoms[i], atoms[j]);
                prod *= cell_step((ri - distance(p, atoms[j])) / sep, sep);
              }
              cell[i] = prod;
              total += prod;
            }
            partition = total > 0.0 ? cell[a] / total : 0.0;
          }
          const double w = wr * polar.weights[it] * dphi * partition;
          if (w == 0.0) continue;
          points_.push_back(p);
          weights_.push_back(w);
        }
      }
    }
  }
}

}  // namespace h3sep
