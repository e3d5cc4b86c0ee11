#include "nu_engine.hpp"

#include <cmath>

#include "errors.hpp"
#include "specfun.hpp"

namespace gmorse {

NUConstants derive_constants(const NUTemplate &t) {
  if (t.c3 == 0.0)
    throw domain_error("derive_constants: c3 must be nonzero for the z(1 - c3 z) form");

  NUConstants k{};
  k.c4 = 0.5 * (1.0 - t.c1);
  k.c5 = 0.5 * (t.c2 - 2.0 * t.c3);
  k.c6 = k.c5 * k.c5 + t.A;
  k.c7 = 2.0 * k.c4 * k.c5 - t.B;
  k.c8 = k.c4 * k.c4 + t.C;
  k.c9 = t.c3 * (k.c7 + t.c3 * k.c8) + k.c6;

  if (k.c8 < 0 || k.c9 < 0)
    throw no_bound_state_error("derive_constants: c8 or c9 negative, no real NU solution");

  const double s8 = std::sqrt(k.c8);
  const double s9 = std::sqrt(k.c9);

  k.c10 = t.c1 + 2.0 * k.c4 + 2.0 * s8 - 1.0;
  k.c11 = 1.0 - t.c1 - 2.0 * k.c4 + 2.0 / t.c3 * s9;
  k.c12 = k.c4 + s8;
  k.c13 = -k.c4 + (s9 - k.c5) / t.c3;

  if (!(k.c12 > 0) || !(k.c13 > 0))
    throw unphysical_solution_error("derive_constants: c12 or c13 not positive");

  k.pi = {k.c5 - (s9 + t.c3 * s8), k.c4 + s8};
  k.k = -(k.c7 + 2.0 * t.c3 * k.c8) - 2.0 * std::sqrt(k.c8 * k.c9);
  k.tau = {-(t.c2 - 2.0 * k.c5) - 2.0 * (s9 + t.c3 * s8), 1.0 + 2.0 * s8};
  if (!(k.tau.slope < 0))
    throw unphysical_solution_error("derive_constants: tau'(z) must be negative");
  return k;
}

double eigenvalue_residual(const NUTemplate &t, int n) {
  const NUConstants k = derive_constants(t);
  const double s8 = std::sqrt(k.c8);
  const double s9 = std::sqrt(k.c9);
  return (t.c2 - t.c3) * n + t.c3 * n * n - (2 * n + 1) * k.c5 +
         (2 * n + 1) * (s9 + t.c3 * s8) + k.c7 + 2.0 * t.c3 * k.c8 +
         2.0 * std::sqrt(k.c8 * k.c9);
}

WavefunctionFactors wavefunction_factors(const NUTemplate &t, int n) {
  const NUConstants k = derive_constants(t);
  if (!(k.c10 > -1.0) || !(k.c11 > -1.0))
    throw unphysical_solution_error("wavefunction_factors: Jacobi parameters out of range");

  const double c3 = t.c3;
  WavefunctionFactors f;
  f.phi = [k, c3](double z) { return std::pow(z, k.c12) * std::pow(1.0 - c3 * z, k.c13); };
  f.rho = [k, c3](double z) { return std::pow(z, k.c10) * std::pow(1.0 - c3 * z, k.c11); };
  f.y_n = [k, c3, n](double z) { return jacobi_poly(n, k.c10, k.c11, 1.0 - 2.0 * c3 * z); };
  return f;
}

} // namespace gmorse
