#pragma once

#include <functional>

namespace gmorse {

/// Six-coefficient template of the hypergeometric-type equation
///   psi'' + (c1 - c2 z)/(z(1 - c3 z)) psi' + (-A z^2 + B z - C)/(z(1-c3 z))^2 psi = 0.
struct NUTemplate {
  double c1 = 0, c2 = 0, c3 = 0;
  double A = 0, B = 0, C = 0;
};

struct LinearPoly {
  double slope = 0, intercept = 0;
  double operator()(double z) const { return slope * z + intercept; }
};

/// Derived constants c4..c13 of the parametric Nikiforov-Uvarov scheme plus
/// the essential polynomials pi(z), tau(z) and the root k.
struct NUConstants {
  double c4, c5, c6, c7, c8, c9, c10, c11, c12, c13;
  LinearPoly pi;
  LinearPoly tau;
  double k;
};

/// Computes c4..c13, pi, k, tau. Throws no_bound_state_error when c8 or c9
/// is negative and unphysical_solution_error when c12 <= 0 or c13 <= 0
/// (normalization integrals diverge in those regimes).
NUConstants derive_constants(const NUTemplate &t);

/// Value of the eigenvalue relation for radial number n: zero iff the
/// template is on-shell.
double eigenvalue_residual(const NUTemplate &t, int n);

/// phi(z) = z^{c12} (1 - c3 z)^{c13}, weight rho(z) = z^{c10} (1 - c3 z)^{c11}
/// and y_n(z) = P_n^{(c10, c11)}(1 - 2 c3 z). Requires c10 > -1, c11 > -1,
/// c12 > 0, c13 > 0.
struct WavefunctionFactors {
  std::function<double(double)> phi;
  std::function<double(double)> rho;
  std::function<double(double)> y_n;
};

WavefunctionFactors wavefunction_factors(const NUTemplate &t, int n);

} // namespace gmorse
