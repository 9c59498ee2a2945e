#pragma once

#include <cstddef>

#include "h3sep/geometry.hpp"
#include "h3sep/wavefunction.hpp"

// Independent numerical route to the closed forms of the solver. Nothing in
// the production solve path includes this header; it backs tests and the
// `validate` / `hydrogen-check` commands.
namespace h3sep::oracle {

struct QuadratureResult {
  double value;
  double abs_error_estimate;
  std::size_t evaluations;
};

/// Two-center overlap integral by radial quadrature in momentum space,
///   (1 / 2 pi^2) * int_0^inf k^2 phi0(k) v0(k) j0(k d) / (k^2 + x^2) dk.
/// Throws QuadratureFailure if the requested accuracy is not reached.
QuadratureResult i_integral(double d, double x);

/// Hydrogen consistency matrix element
///   A_qm = (1 / 2 pi^2) * int_0^inf k^2 phi_q(k) v_m(k) / (k^2 + x^2) dk,
/// q, m in {0, 1}.
QuadratureResult a_entry(int q, int m, double x);

enum class Center { Origin, Plus, Minus };

/// lambda_c = int d^3r phi_1s(r - c) psi(r), evaluated in position space on
/// the multi-center grid with psi treated as a black box.
QuadratureResult lambda_projection(const PsiParams& params, Center which);

/// int |psi|^2 d^3r evaluated in momentum space, where psi is a sum of shifted
/// Yukawa differences with known transforms.
QuadratureResult psi_norm_momentum(const PsiParams& params);

}  // namespace h3sep::oracle
