#pragma once

#include <functional>
#include <string>
#include <vector>

#include "model.hpp"
#include "potentials.hpp"

namespace gmorse {

/// Radial Sturm-Liouville problem -psi'' + U(r) psi = eps psi on (0, r_max)
/// with Dirichlet boundaries; U carries the exact centrifugal term. The mesh
/// is uniform with `points` interior nodes (r_i = i h, h = r_max/(points+1)).
struct RadialProblem {
  std::function<double(double)> effective_potential;
  double r_max = 40.0;
  int points = 20000;
};

struct RadialEigenvalues {
  std::vector<double> values; ///< ascending, Richardson-extrapolated
  bool truncated = false;     ///< true if fewer than `count` lie below the box threshold
};

/// Lowest `count` eigenvalues via second-order finite differences, Sturm
/// bisection on the tridiagonal matrix, Richardson extrapolation over {h, h/2}.
RadialEigenvalues radial_eigenvalues(const RadialProblem &rp, int count);

/// Self-consistent eigenvalue of the second-order Dirac-reduced equation with
/// the exact (pseudo-)centrifugal term: the E-dependent coefficients are
/// frozen, the linear eigenproblem solved, and E updated by secant iteration
/// until |dE| < 1e-9. Throws convergence_error after 200 iterations.
double dirac_effective_eigenvalue(const PotentialParams &p, const RelativisticContext &ctx,
                                  const QuantumNumbers &q, double initial_guess);

/// Non-relativistic oracle energy for the given potential with the exact
/// centrifugal term (the independent check of the approximate closed forms).
double nonrel_oracle_energy(const PotentialParams &p, const NonRelContext &ctx, int n, int l,
                            PotentialKind kind = PotentialKind::gmp);

struct ApproximationRow {
  std::string state;
  double alpha = 0, r_e = 0;
  int n = 0, l = 0;
  double closed_form = 0;
  double oracle = 0;
  double abs_delta = 0;
  bool failed = false;
  std::string message;
};

struct StateRequest {
  std::string label;
  int n = 0, l = 0;
  double alpha = 0, r_e = 0;
};

/// Per-state comparison closed-form vs oracle on a list of non-relativistic
/// GMP states. Solver failures are flagged per row, never thrown.
std::vector<ApproximationRow> approximation_report(double D, const NonRelContext &ctx,
                                                   const std::vector<StateRequest> &states,
                                                   const ApproximationConfig &cfg = {});

} // namespace gmorse
