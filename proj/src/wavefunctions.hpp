#pragma once

#include <span>
#include <vector>

#include "gmp_spectra.hpp"
#include "model.hpp"
#include "potentials.hpp"

namespace gmorse {

enum class WavefunctionFamily {
  gmp_spin,
  gmp_pseudospin,
  kratzer_spin,
  kratzer_pseudospin,
  nonrel_gmp,
  nonrel_kratzer,
};

/// Sampled radial components. Spin families normalize F, pseudospin families
/// normalize G; non-relativistic families fill F only. norm_constant is the
/// closed-form constant of the normalized component (ln_norm its logarithm).
struct RadialWavefunction {
  WavefunctionFamily family{};
  std::vector<double> r;
  std::vector<double> F;
  std::vector<double> G;
  double norm_constant = 0;
  double ln_norm = 0;
};

/// Geometric grid of n_points radii on [1e-4, r_max], r_max chosen so the
/// analytic envelope peaked at r_peak has dropped below 1e-14 of its maximum.
std::vector<double> envelope_grid(double r_peak, double decay_rate, int n_points = 4000);

/// Integral of f^2 dr on a strictly increasing grid (composite Simpson with
/// non-uniform spacing).
double norm_integral(std::span<const double> r, std::span<const double> f);

RadialWavefunction gmp_spin_components(const PotentialParams &p, const RelativisticContext &ctx,
                                       const QuantumNumbers &q, double E,
                                       std::span<const double> grid,
                                       const ApproximationConfig &cfg = {});

RadialWavefunction gmp_pseudospin_components(const PotentialParams &p,
                                             const RelativisticContext &ctx,
                                             const QuantumNumbers &q, double E,
                                             std::span<const double> grid,
                                             const ApproximationConfig &cfg = {});

RadialWavefunction kratzer_spin_components(const PotentialParams &p, const RelativisticContext &ctx,
                                           const QuantumNumbers &q, double E,
                                           std::span<const double> grid);

RadialWavefunction kratzer_pseudospin_components(const PotentialParams &p,
                                                 const RelativisticContext &ctx,
                                                 const QuantumNumbers &q, double E,
                                                 std::span<const double> grid);

RadialWavefunction nonrel_wavefunction(const PotentialParams &p, const NonRelContext &ctx, int n,
                                       int l, std::span<const double> grid,
                                       const ApproximationConfig &cfg = {});

RadialWavefunction kratzer_nonrel_wavefunction(const PotentialParams &p, const NonRelContext &ctx,
                                               int n, int l, std::span<const double> grid);

/// kappa = -1 (spin) / kappa = +1 (pseudospin) specializations at C_sym = 0;
/// sample-for-sample equal to the general builders at those kappa.
RadialWavefunction s_wave_components(const PotentialParams &p, const RelativisticContext &ctx,
                                     int n, Symmetry mode, std::span<const double> grid,
                                     const ApproximationConfig &cfg = {});

/// Default grid for a solved state of the given family.
std::vector<double> default_grid(const PotentialParams &p, const RelativisticContext &ctx,
                                 const QuantumNumbers &q, double E, WavefunctionFamily family,
                                 const ApproximationConfig &cfg = {}, int n_points = 4000);
std::vector<double> default_grid_nonrel(const PotentialParams &p, const NonRelContext &ctx, int n,
                                        int l, WavefunctionFamily family,
                                        const ApproximationConfig &cfg = {}, int n_points = 4000);

} // namespace gmorse
