#pragma once

#include <array>
#include <complex>

#include "gmp_spectra.hpp"
#include "model.hpp"

namespace gmorse {

struct QuarticCoefficients {
  double a4 = 0, a3 = 0, a2 = 0, a1 = 0, a0 = 0;
};

/// Which branch of the resolvent-cubic trichotomy a solve took.
enum class CubicCase { three_real, one_real, triple_root };

/// Roots of a x^3 + b x^2 + c x + d = 0 (a != 0), closed form. The case
/// trichotomy is decided by the discriminant h = g^2/4 + f^3/27 of the
/// depressed cubic.
std::array<std::complex<double>, 3> solve_cubic(double a, double b, double c, double d,
                                                CubicCase *which = nullptr);

/// Roots of a4 E^4 + ... + a0 = 0 (a4 != 0) via the resolvent cubic, with a
/// final complex Newton polish. When the resolvent has three real roots the
/// two non-zero ones are combined; with one real root the two complex ones.
std::array<std::complex<double>, 4> solve_quartic(const QuarticCoefficients &qc,
                                                  CubicCase *which = nullptr);

/// Quartic form of the Kratzer spin-symmetric energy condition (c = 1 units).
QuarticCoefficients build_quartic_coefficients(const PotentialParams &p,
                                               const RelativisticContext &ctx,
                                               const QuantumNumbers &q);

/// Residual of the transcendental Kratzer spin equation
///   (Mc^2 - E + D) - q D^2 (Mc^2+E-C_s) / (N_n + sqrt(N_k^2 + qD(Mc^2+E-C_s)))^2.
double kratzer_spin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                             const QuantumNumbers &q, double E);

/// Residual of the pseudospin analogue, self-consistent in K~(E).
double kratzer_pseudospin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                                   const QuantumNumbers &q, double E);

/// lambda - lambda_n of the NU construction for the Kratzer spin problem;
/// zero exactly at the kratzer_spin_energy root.
double kratzer_nu_lambda_residual(const PotentialParams &p, const RelativisticContext &ctx,
                                  const QuantumNumbers &q, double E);

/// Bound-state energy of the Kratzer limit under spin symmetry. The root of
/// the transcendental equation is cross-checked against the closed-form
/// quartic roots to 1e-9 relative.
EnergySolution kratzer_spin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                                   const QuantumNumbers &q);

/// Pseudospin analogue; physical branch requires E > Mc^2 + C_ps (the point
/// E = Mc^2 + C_ps trivially satisfies the squared equation and is excluded).
EnergySolution kratzer_pseudospin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                                         const QuantumNumbers &q);

/// Closed-form non-relativistic Kratzer level.
double kratzer_nonrel_energy(const PotentialParams &p, const NonRelContext &ctx, int n, int l);

} // namespace gmorse
