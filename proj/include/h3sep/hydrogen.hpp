#pragma once

#include <optional>
#include <vector>

namespace h3sep::hydrogen {

/// Consistency matrix of the two-level (1s + 2s) finite-rank hydrogen
/// Hamiltonian at binding energy eps = x^2.
///
/// Indices follow A_qm = <phi_q | (p^2 + eps)^-1 | v_m>, so that (A - I) L = 0
/// holds for the amplitude vector L = (lambda_0, lambda_1). In this convention
/// a01 vanishes at the 2s level (x = 1/2) and a10 at the 1s level (x = 1).
struct AMatrix2 {
  double a00;
  double a01;
  double a10;
  double a11;
};

struct HydrogenRoot {
  double x;
  /// Null vector of (A - I), unit length, dominant component positive.
  double lambda0;
  double lambda1;
  /// lambda1 / lambda0; empty when lambda0 vanishes (pure 2s state).
  std::optional<double> lambda_ratio;
  /// Set when one amplitude vanishes, i.e. the root is an unmixed eigenstate.
  bool pure_state;
};

/// Throws DomainError for x <= 0.
AMatrix2 a_matrix(double x);

/// (a00 - 1)(a11 - 1) - a01 a10. Throws DomainError for x <= 0.
double secular_det(double x);

/// Brackets sign changes of secular_det on (0, x_max] with step 1e-3 and
/// bisects them to `tol`. Requires x_max >= 2 and 0 < tol < 1e-6. Throws
/// NoBoundState unless exactly two roots are isolated.
std::vector<HydrogenRoot> find_hydrogen_roots(double x_max, double tol);

}  // namespace h3sep::hydrogen
