#include <doctest.h>

#include <cmath>
#include <numbers>

#include "h3sep/errors.hpp"
#include "h3sep/oracle.hpp"
#include "h3sep/wavefunction.hpp"
#include "test_support.hpp"

using namespace h3sep;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 spherical(double r, double theta, double phi) {
  return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
          r * std::cos(theta)};
}

PsiParams raw_at(double r, double alpha) {
  const Geometry g(r, alpha);
  return raw_params(g, ground_state_root(g));
}

}  // namespace

TEST_SUITE("wavefunction") {

TEST_CASE("rho is the distance to the displaced protons") {
  const Geometry g(1.6, kPi / 6.0);
  CHECK(rho_pm(1.6, 0.5 * kPi, 0.0, g, +1) ==
        doctest::Approx(distance(spherical(1.6, 0.5 * kPi, 0.0), g.plus())).epsilon(1e-14));
  CHECK(rho_pm(1.6, kPi / 3.0, 0.0, g, +1) == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(rho_pm(1.6, 2.0 * kPi / 3.0, 0.0, g, -1) == doctest::Approx(0.0).epsilon(1e-7));
  for (int sign : {-1, 1}) CHECK(rho_pm(0.0, 1.1, 2.2, g, sign) == doctest::Approx(1.6));
  for (double t : {0.1, 1.0, 2.5}) {
    for (double p : {0.3, 2.0, 4.0}) {
      for (int sign : {-1, 1}) {
        const Vec3 c = sign > 0 ? g.plus() : g.minus();
        CHECK(rho_pm(0.9, t, p, g, sign) ==
              doctest::Approx(distance(spherical(0.9, t, p), c)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("yukawa difference has the x - 1 limit") {
  CHECK(yukawa_difference(0.0, 0.75) == 0.75);
  CHECK(yukawa_difference(1e-9, 0.75) == 0.75);
  CHECK(yukawa_difference(1.01e-8, 0.75) == doctest::Approx(0.75).epsilon(1e-7));
  CHECK(yukawa_difference(2.0, 0.5) ==
        doctest::Approx((std::exp(-2.0) - std::exp(-3.0)) / 2.0).epsilon(1e-15));
}

TEST_CASE("raw parameters") {
  const PsiParams p = raw_at(1.6, kPi / 6.0);
  CHECK(p.norm == 1.0);
  CHECK(std::isfinite(p.mixing));
  CHECK(p.mixing == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("antisymmetric roots are rejected") {
  const Geometry g(3.0, 0.9);
  const auto ex = excited_root(g);
  REQUIRE(ex.has_value());
  CHECK_THROWS_AS(raw_params(g, *ex), DomainError);
}

TEST_CASE("psi is even in phi") {
  const PsiParams p = raw_at(1.3, 0.8);
  for (double t : {0.2, 1.0, 2.9}) {
    for (double phi : {0.1, 1.3, 2.8}) {
      CHECK(psi(1.1, t, phi, p) == psi(1.1, t, -phi, p));
    }
  }
}

TEST_CASE("linear chain is symmetric under z reflection") {
  const PsiParams p = raw_at(1.4, kPi / 2.0);
  for (double t : {0.2, 0.7, 1.3}) {
    for (double phi : {0.0, 1.0, 3.0}) {
      CHECK(psi(1.2, kPi - t, phi, p) == doctest::Approx(psi(1.2, t, phi, p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("psi_at matches the spherical form") {
  const PsiParams p = raw_at(1.6, kPi / 6.0);
  CHECK(psi_at(spherical(0.7, 1.2, 0.4), p) == doctest::Approx(psi(0.7, 1.2, 0.4, p)).epsilon(1e-13));
}

TEST_CASE("scaling the norm scales psi") {
  PsiParams p = raw_at(1.6, kPi / 6.0);
  const double base = psi(1.0, 0.8, 0.3, p);
  p.norm = 2.0;
  CHECK(psi(1.0, 0.8, 0.3, p) == doctest::Approx(2.0 * base).epsilon(1e-15));
}

TEST_CASE("normalized psi has unit norm") {
  for (double r : {0.0, 1.0, 1.6, 3.0}) {
    const Geometry g(r, kPi / 6.0);
    const PsiParams p = normalize(g, ground_state_root(g));
    CHECK(p.norm > 0.0);
    const double momentum = oracle::psi_norm_momentum(p).value;
    CHECK(momentum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("isolated-atom limit still normalizes") {
  const Geometry g(50.0, 0.5);
  const SecularRoot root = ground_state_root(g);
  const PsiParams raw = raw_params(g, root);
  const double n2 = norm_integral(raw, kNormFine);
  CHECK(n2 > 0.0);
  CHECK(std::isfinite(n2));
  CHECK(n2 == doctest::Approx(oracle::psi_norm_momentum(raw).value).epsilon(1e-8));
  CHECK_NOTHROW(normalize(g, root));
}

TEST_CASE("united atom is spherically symmetric") {
  const PsiParams p = raw_at(0.0, 0.6);
  const AngularGrid grid = psi_grid(1.3, p, 20, 40);
  double mean = 0.0;
  for (double v : grid.values) mean += v;
  mean /= double(grid.values.size());
  double var = 0.0;
  for (double v : grid.values) var += (v - mean) * (v - mean);
  var /= double(grid.values.size());
  CHECK(var < 1e-10);
}

TEST_CASE("angular grid shape and symmetry") {
  const Geometry g(1.6, kPi / 6.0);
  const AngularGrid grid = psi_grid(1.6, g, ground_state_root(g), 90, 180);
  CHECK(grid.values.size() == 90u * 180u);
  CHECK(grid.theta.size() == 90u);
  CHECK(grid.phi.size() == 180u);
  for (double v : grid.values) REQUIRE(std::isfinite(v));
  for (std::size_t i = 0; i < grid.theta_count; ++i) {
    for (std::size_t j = 0; j < grid.phi_count; ++j) {
      REQUIRE(grid.at(i, j) == doctest::Approx(grid.at(i, grid.phi_count - 1 - j)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(psi_grid(1.6, g, ground_state_root(g), 1, 10), DomainError);
}

TEST_CASE("lobes point at the protons on the sphere") {
  const Geometry g(1.6, kPi / 6.0);
  const AngularGrid grid = psi_grid(1.6, g, ground_state_root(g), 90, 180);
  const double dtheta = kPi / 90.0;
  const double dphi = 2.0 * kPi / 180.0;
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 0; i < grid.theta_count; ++i) {
    for (std::size_t j = 0; j < grid.phi_count; ++j) {
      if (grid.at(i, j) > grid.at(best_i, best_j)) {
        best_i = i;
        best_j = j;
      }
    }
  }
  const double theta = grid.theta[best_i];
  const double phi = grid.phi[best_j];
  const bool near_plus = std::abs(theta - kPi / 3.0) <= dtheta;
  const bool near_minus = std::abs(theta - 2.0 * kPi / 3.0) <= dtheta;
  CHECK((near_plus || near_minus));
  CHECK(std::min(phi, 2.0 * kPi - phi) <= dphi);
}

}
