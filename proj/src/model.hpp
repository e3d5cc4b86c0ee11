#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace gmorse {

enum class Symmetry { spin, pseudospin, nonrelativistic };

/// Generalized Morse potential parameters. b is always derived from alpha and
/// r_e, so the b = exp(alpha*r_e) - 1 invariant cannot drift.
struct PotentialParams {
  double D = 0;     ///< dissociation energy
  double alpha = 0; ///< inverse range of the well; alpha = 0 is the Kratzer limit
  double r_e = 0;   ///< equilibrium internuclear distance

  double b() const;
  void validate() const; // throws domain_error
};

/// Mass and symmetry constant for the Dirac problem. C_sym means C_s under
/// spin symmetry and C_ps under pseudospin symmetry. hbar and c are kept as
/// explicit factors (default 1).
struct RelativisticContext {
  double M = 0;
  double C_sym = 0;
  double hbar = 1.0;
  double c = 1.0;

  double Mc2() const { return M * c * c; }
  double hc2() const { return hbar * hbar * c * c; }
  void validate() const;
};

struct NonRelContext {
  double mu = 0; ///< reduced mass
  double hbar = 1.0;

  void validate() const;
};

/// Radial quantum number n and spin-orbit quantum number kappa.
/// l and l~ follow from kappa(kappa+1) = l(l+1) and kappa(kappa-1) = l~(l~+1).
struct QuantumNumbers {
  int n = 0;
  int kappa = 0;
  Symmetry symmetry = Symmetry::spin;

  int l() const { return kappa > 0 ? kappa : -kappa - 1; }
  int l_tilde() const { return kappa > 0 ? kappa - 1 : -kappa; }
  int two_j() const { return 2 * (kappa > 0 ? kappa : -kappa) - 1; }
  void validate() const;
};

/// Parsed "Nl" or "Nl_{2j/2}" token, e.g. "2p", "0p_{3/2}", "1s1/2".
struct SpectroscopicLabel {
  int principal = 0; ///< the leading integer as printed
  int l = 0;         ///< orbital letter: s..h -> 0..5
  int two_j = -1;    ///< 2j, or -1 when no j suffix is present

  static SpectroscopicLabel parse(std::string_view text); // throws label_error
  std::string str() const;
};

/// Relativistic label -> (n, kappa). The leading integer is the radial n; the
/// letter is the orbital l of the upper component, so the Dirac rule
/// kappa = -(l+1) for j = l+1/2 and kappa = +l for j = l-1/2 applies in both
/// symmetry modes.
QuantumNumbers kappa_from_label(const SpectroscopicLabel &label, Symmetry symmetry);
QuantumNumbers kappa_from_label(std::string_view text, Symmetry symmetry);

/// Reconstructs the printed label of a relativistic state.
std::string label_from_state(const QuantumNumbers &q);

/// Non-relativistic "Nl" -> (n, l) with n = N - l - 1.
std::pair<int, int> nonrel_label_to_nl(const SpectroscopicLabel &label);
std::pair<int, int> nonrel_label_to_nl(std::string_view text);

} // namespace gmorse
