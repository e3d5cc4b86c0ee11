#pragma once

#include <variant>

#include "model.hpp"
#include "potentials.hpp"

namespace gmorse {

/// Dimensionless auxiliaries of the spin-symmetric solution at energy E.
struct SpinAuxiliary {
  double nu1_sq;    ///< (Mc^2 + E - C_s) D / (alpha hbar c)^2
  double omega1_sq; ///< (E^2 - M^2c^4 + C_s(Mc^2 - E)) / (alpha hbar c)^2
  double epsilon;   ///< decay exponent, positive for bound states
  double delta1;    ///< (1 + sqrt((1+2k)^2 + 4 b^2 nu1^2))/2 >= 1
};

/// Pseudospin counterparts. nu2_sq may be negative (E above Mc^2 + C_ps);
/// only nu2_sq itself ever enters the formulas.
struct PseudospinAuxiliary {
  double nu2_sq;
  double omega2_sq;
  double epsilon_tilde; ///< positive root of eps~^2
  double delta2;
};

struct KratzerAuxiliary {
  double gamma;
  double epsilon_k;
  double K; ///< (gamma - 1)/2
  double q; ///< (2 r_e / hbar c)^2
  int N_n;  ///< 2n + 1
  int N_kappa; ///< 2 kappa + 1
};

struct EnergySolution {
  double energy = 0;
  double residual = 0;
  double bracket_lo = 0, bracket_hi = 0;
  std::variant<SpinAuxiliary, PseudospinAuxiliary, KratzerAuxiliary> aux;
};

/// Residual of the spin-symmetric energy equation at trial energy E:
///   (Mc^2+E-C_s)(Mc^2+D-E) + (hbar c alpha)^2 kappa(kappa+1) d0
///     - (hbar c alpha)^2 [ (2+b) b nu1^2 / (2(n+d1)) - (n+d1)/2 ]^2.
double spin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                     const QuantumNumbers &q, double E, const ApproximationConfig &cfg = {});

/// Same for the pseudospin equation with kappa(kappa-1) and
/// (2+b) b nu2^2/(2(n+d2)) + (n+d2)/2.
double pseudospin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                           const QuantumNumbers &q, double E, const ApproximationConfig &cfg = {});

SpinAuxiliary spin_auxiliary(const PotentialParams &p, const RelativisticContext &ctx,
                             const QuantumNumbers &q, double E, const ApproximationConfig &cfg = {});

/// epsilon as the on-shell branch expression (2+b) b nu1^2/(2(n+d1)) - (n+d1)/2.
/// Coincides with sqrt(eps^2) of the auxiliary at an exact root.
double spin_epsilon_value(const PotentialParams &p, const RelativisticContext &ctx,
                          const QuantumNumbers &q, double E);

/// epsilon~ as the branch expression -[(2+b) b nu2^2/(2(n+d2)) + (n+d2)/2].
double pseudospin_epsilon_tilde_value(const PotentialParams &p, const RelativisticContext &ctx,
                                      const QuantumNumbers &q, double E);

PseudospinAuxiliary pseudospin_auxiliary(const PotentialParams &p, const RelativisticContext &ctx,
                                         const QuantumNumbers &q, double E,
                                         const ApproximationConfig &cfg = {});

/// Bound-state energy under spin symmetry. Scans E over
/// (C_s - Mc^2, Mc^2 + D), refines sign changes by bisection and keeps roots
/// on the decaying branch (epsilon > 0). No surviving root throws
/// no_bound_state_error; several throw ambiguous_root_error.
EnergySolution spin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                           const QuantumNumbers &q, const ApproximationConfig &cfg = {});

/// Bound-state energy under pseudospin symmetry; the physical branch has
/// epsilon~ = -[(2+b) b nu2^2/(2(n+d2)) + (n+d2)/2] > 0.
EnergySolution pseudospin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                                 const QuantumNumbers &q, const ApproximationConfig &cfg = {});

/// s-wave (kappa = -1, C_s = 0) residual; identical to spin_residual there
/// since kappa(kappa+1) = 0.
double swave_spin_residual(const PotentialParams &p, const RelativisticContext &ctx, int n, double E);

/// s~-wave (kappa = +1, C_ps = 0) residual.
double swave_pseudospin_residual(const PotentialParams &p, const RelativisticContext &ctx, int n,
                                 double E);

/// Closed-form non-relativistic level for orbital quantum number l.
double nonrel_energy(const PotentialParams &p, const NonRelContext &ctx, int n, int l,
                     const ApproximationConfig &cfg = {});

} // namespace gmorse
