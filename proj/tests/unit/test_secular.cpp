#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "h3sep/errors.hpp"
#include "h3sep/secular.hpp"
#include "test_support.hpp"

using namespace h3sep;
using h3sep::testing::kTableAngles;
using h3sep::testing::reference_rows;

namespace {

constexpr double kPi = std::numbers::pi;

// Largest sign change of a factor on a fine uniform grid, refined by plain
// bisection on the factor itself.
double brute_force_largest_root(const Geometry& g, Factor factor) {
  const auto f = [&](double x) { return factor_value(g, factor, x); };
  double hi = 4.0;
  double fhi = f(hi);
  for (double lo = 4.0 - 1e-3; lo > 1e-3; lo -= 1e-3) {
    const double flo = f(lo);
    if (std::signbit(flo) != std::signbit(fhi)) {
      double a = lo;
      double b = hi;
      for (int i = 0; i < 100; ++i) {
        const double m = 0.5 * (a + b);
        if (std::signbit(f(m)) == std::signbit(f(a))) a = m; else b = m;
      }
      return 0.5 * (a + b);
    }
    hi = lo;
    fhi = flo;
  }
  return NAN;
}

}  // namespace

TEST_SUITE("secular") {

TEST_CASE("tabulated roots zero the symmetric factor") {
  CHECK(std::abs(secular_factors(Geometry(0.0, 0.4), 2.1349367).symmetric) < 1e-6);
  CHECK(std::abs(secular_factors(Geometry(1.0, kPi / 2.0), 1.8749557).symmetric) < 1e-6);
}

TEST_CASE("antisymmetric factor is -1 at coincident centers") {
  for (double x : {0.3, 1.0, 2.0, 3.7}) {
    CHECK(secular_factors(Geometry(0.0, kPi / 3.0), x).antisymmetric == doctest::Approx(-1.0));
  }
}

TEST_CASE("ground-state roots at sample geometries") {
  CHECK(ground_state_root(Geometry(1.6, kPi / 6.0)).x == doctest::Approx(1.7893258).epsilon(1e-7));
  CHECK(ground_state_root(Geometry(3.0, kPi / 8.0)).x == doctest::Approx(1.4802771).epsilon(1e-7));
  CHECK(ground_state_root(Geometry(0.5, kPi / 2.0)).x == doctest::Approx(2.0471617).epsilon(1e-7));
}

TEST_CASE("root fields are consistent") {
  const SecularRoot root = ground_state_root(Geometry(1.2, kPi / 3.0));
  CHECK(root.factor == Factor::Symmetric);
  CHECK(root.epsilon == root.x * root.x);
  CHECK(root.x_minus_one == doctest::Approx(root.x - 1.0).epsilon(1e-12));
}

TEST_CASE("ground state is the largest sign change of the symmetric factor") {
  for (double alpha : kTableAngles) {
    for (const auto& [r, x_ref] : reference_rows(alpha)) {
      const Geometry g(r, alpha);
      const double brute = brute_force_largest_root(g, Factor::Symmetric);
      CHECK(ground_state_root(g).x == doctest::Approx(brute).epsilon(1e-9));
    }
  }
}

TEST_CASE("every returned root satisfies its own factor") {
  for (double alpha : kTableAngles) {
    for (double r : {0.0, 0.4, 1.0, 2.2, 3.0, 6.0, 20.0}) {
      const Geometry g(r, alpha);
      const SecularRoot gs = ground_state_root(g);
      CHECK(std::abs(factor_value(g, gs.factor, gs.x)) < kRootResidual);
      if (const auto ex = excited_root(g)) {
        CHECK(ex->factor == Factor::Antisymmetric);
        CHECK(std::abs(factor_value(g, ex->factor, ex->x)) < kRootResidual);
      }
    }
  }
}

TEST_CASE("tabulated roots decrease with R") {
  for (double alpha : kTableAngles) {
    double prev = INFINITY;
    for (const auto& [r, x_ref] : reference_rows(alpha)) {
      const double x = ground_state_root(Geometry(r, alpha)).x;
      CHECK(x < prev);
      prev = x;
    }
  }
}

TEST_CASE("excited root") {
  SUBCASE("absent at coincident centers") {
    CHECK_FALSE(excited_root(Geometry(0.0, kPi / 6.0)).has_value());
  }
  SUBCASE("matches a brute-force scan of the antisymmetric factor") {
    const Geometry g(3.0, kPi / 2.0);
    const auto ex = excited_root(g);
    const double brute = brute_force_largest_root(g, Factor::Antisymmetric);
    REQUIRE(ex.has_value() == !std::isnan(brute));
    if (ex) CHECK(ex->x == doctest::Approx(brute).epsilon(1e-9));
  }
  SUBCASE("approaches the isolated atom at large separation") {
    const auto ex = excited_root(Geometry(50.0, 0.7));
    REQUIRE(ex.has_value());
    CHECK(std::abs(ex->x - 1.0) < 1e-3);
  }
}

TEST_CASE("ground state near the isolated-atom limit keeps its offset") {
  const SecularRoot root = ground_state_root(Geometry(50.0, 0.5));
  CHECK(root.x_minus_one > 0.0);
  CHECK(root.x_minus_one < 1e-10);
  CHECK(std::abs(factor_value(Geometry(50.0, 0.5), Factor::Symmetric, root.x)) < kRootResidual);
}

TEST_CASE("lambda vectors") {
  SUBCASE("fully symmetric at coincident centers") {
    const Geometry g(0.0, kPi / 4.0);
    const LambdaVector l = lambda_vector(g, ground_state_root(g));
    CHECK(l.l0 == 1.0);
    CHECK(l.lplus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l.lminus == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("mixing ratio at an equilateral geometry") {
    const Geometry g(1.6, kPi / 6.0);
    const SecularRoot root = ground_state_root(g);
    const IntegralSet s = integral_set(g, root.x);
    const LambdaVector l = lambda_vector(g, root);
    CHECK(l.lplus == l.lminus);
    CHECK(l.lplus / l.l0 == doctest::Approx((1.0 - s.i0) / (2.0 * s.iplus)).epsilon(1e-9));
  }
  SUBCASE("antisymmetric root") {
    const Geometry g(3.0, 0.9);
    const auto ex = excited_root(g);
    REQUIRE(ex.has_value());
    const LambdaVector l = lambda_vector(g, *ex);
    CHECK(l.l0 == 0.0);
    CHECK(l.lplus == 1.0);
    CHECK(l.lminus == -1.0);
  }
  SUBCASE("consistency residual is tiny on the tables") {
    for (double alpha : kTableAngles) {
      for (const auto& [r, x_ref] : reference_rows(alpha)) {
        const Geometry g(r, alpha);
        const SecularRoot root = ground_state_root(g);
        const LambdaVector res = consistency_residual(integral_set(g, root.x), lambda_vector(g, root));
        CHECK(std::max({std::abs(res.l0), std::abs(res.lplus), std::abs(res.lminus)}) < 1e-8);
      }
    }
  }
}

TEST_CASE("root tolerance is validated") {
  CHECK_THROWS_AS(ground_state_root(Geometry(1.0, 0.5), 0.0), DomainError);
  CHECK_THROWS_AS(ground_state_root(Geometry(1.0, 0.5), 1e-3), DomainError);
}

}
