#pragma once

#include <optional>

#include "h3sep/geometry.hpp"
#include "h3sep/integrals.hpp"

namespace h3sep {

/// Which factor of the secular determinant a root belongs to.
///
/// The determinant of the 3x3 consistency system factorizes as
///   (I0 - I1 - 1) * [(I0 - 1)^2 + (I0 - 1) I1 - 2 I+^2].
/// Antisymmetric roots zero the first factor (lambda+ = -lambda-, lambda0 = 0),
/// Symmetric roots the second (lambda+ = lambda-).
enum class Factor { Symmetric, Antisymmetric };

struct SecularFactors {
  double antisymmetric;  ///< I0 - I1 - 1
  double symmetric;      ///< (I0 - 1)^2 + (I0 - 1) I1 - 2 I+^2
};

struct SecularRoot {
  double x;
  double epsilon;  ///< binding energy x^2 in Rydberg; E = -epsilon
  Factor factor;
  /// x - 1 to full relative precision. Near the isolated-atom limit x rounds
  /// to 1 while the wavefunction still depends on this offset.
  double x_minus_one;
};

struct LambdaVector {
  double l0;
  double lplus;
  double lminus;
};

/// Root scan window and residual gate used by ground_state_root / excited_root.
inline constexpr double kRootScanMin = 1e-6;
inline constexpr double kRootScanMax = 4.0;
inline constexpr double kRootScanStep = 0.01;
inline constexpr double kRootResidual = 1e-10;

SecularFactors secular_factors(const Geometry& geom, double x);

/// Value of the factor a root claims to satisfy.
double factor_value(const Geometry& geom, Factor factor, double x);

/// Largest x in (1e-6, 4] zeroing the symmetric factor, refined to |dx| < tol.
/// Requires 0 < tol <= 1e-8. Throws NoBoundState when the factor has no sign
/// change on the window.
SecularRoot ground_state_root(const Geometry& geom, double tol = 1e-10);

/// Largest root of the antisymmetric factor, if any.
std::optional<SecularRoot> excited_root(const Geometry& geom, double tol = 1e-10);

/// lambda+ / lambda0 at a symmetric root, (1 - I0) / (2 I+), evaluated through
/// the lower branch of the symmetric factor so it stays finite when I+ -> 0.
double symmetric_mixing(const IntegralSet& ints);

/// Amplitudes (lambda0, lambda+, lambda-) solving the consistency equations at
/// a root. Symmetric roots are scaled to lambda0 = 1, antisymmetric roots are
/// (0, 1, -1). Throws InconsistencyError if the residual exceeds 1e-8.
LambdaVector lambda_vector(const Geometry& geom, const SecularRoot& root);

/// Component-wise residual of the consistency equations
///   l0 = I0 l0 + I+ l+ + I+ l-
///   l+ = I+ l0 + I0 l+ + I1 l-
///   l- = I+ l0 + I1 l+ + I0 l-
LambdaVector consistency_residual(const IntegralSet& ints, const LambdaVector& l);

}  // namespace h3sep
