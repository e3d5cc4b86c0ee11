#include "gmp_spectra.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "bracketing.hpp"
#include "errors.hpp"

namespace gmorse {

namespace {

// (2+b) b nu1^2/(2(n+d1)) - (n+d1)/2; this IS epsilon on shell, and its sign
// selects the decaying branch of the squared energy equation.
std::optional<double> spin_epsilon_expr(const PotentialParams &p, const RelativisticContext &ctx,
                                        const QuantumNumbers &q, double E) {
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double nu1_sq = (ctx.Mc2() + E - ctx.C_sym) * p.D / a2hc2;
  const double arg = (1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) + 4.0 * b * b * nu1_sq;
  if (arg < 0)
    return std::nullopt;
  const double d1 = 0.5 * (1.0 + std::sqrt(arg));
  return (2.0 + b) * b * nu1_sq / (2.0 * (q.n + d1)) - 0.5 * (q.n + d1);
}

// (2+b) b nu2^2/(2(n+d2)) + (n+d2)/2; on shell epsilon~ = -eta > 0.
std::optional<double> pseudospin_eta_expr(const PotentialParams &p, const RelativisticContext &ctx,
                                          const QuantumNumbers &q, double E) {
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double nu2_sq = (ctx.Mc2() - E + ctx.C_sym) * p.D / a2hc2;
  const double arg = (1.0 - 2.0 * q.kappa) * (1.0 - 2.0 * q.kappa) - 4.0 * b * b * nu2_sq;
  if (arg < 0)
    return std::nullopt; // delta2 imaginary
  const double d2 = 0.5 * (1.0 + std::sqrt(arg));
  return (2.0 + b) * b * nu2_sq / (2.0 * (q.n + d2)) + 0.5 * (q.n + d2);
}

EnergySolution solve_window(const PotentialParams &p, const RelativisticContext &ctx,
                            const MaskedResidual &residual,
                            const std::function<bool(double)> &physical, const char *what) {
  const double lo = ctx.C_sym - ctx.Mc2() + 1e-6;
  const double hi = ctx.Mc2() + p.D;
  std::vector<double> accepted;
  std::vector<Bracket> accepted_brackets;
  for (const Bracket &br : scan_sign_changes(residual, lo, hi)) {
    const double root = bisect(residual, br);
    if (physical(root)) {
      accepted.push_back(root);
      accepted_brackets.push_back(br);
    }
  }
  if (accepted.empty())
    throw no_bound_state_error(std::string(what) + ": no root with a decaying wavefunction in (" +
                               std::to_string(lo) + ", " + std::to_string(hi) + ")");
  if (accepted.size() > 1) {
    std::string msg = std::string(what) + ": multiple physical roots:";
    for (double r : accepted)
      msg += " " + std::to_string(r);
    throw ambiguous_root_error(msg, accepted);
  }
  EnergySolution sol;
  sol.energy = accepted.front();
  sol.residual = residual(sol.energy).value_or(0.0);
  sol.bracket_lo = accepted_brackets.front().lo;
  sol.bracket_hi = accepted_brackets.front().hi;
  return sol;
}

} // namespace

double spin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                     const QuantumNumbers &q, double E, const ApproximationConfig &cfg) {
  const auto eps = spin_epsilon_expr(p, ctx, q, E);
  if (!eps)
    throw domain_error("spin_residual: delta1 imaginary at E = " + std::to_string(E));
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double lhs = (ctx.Mc2() + E - ctx.C_sym) * (ctx.Mc2() + p.D - E) +
                     a2hc2 * q.kappa * (q.kappa + 1) * cfg.d0;
  return lhs - a2hc2 * *eps * *eps;
}

double pseudospin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                           const QuantumNumbers &q, double E, const ApproximationConfig &cfg) {
  const auto eta = pseudospin_eta_expr(p, ctx, q, E);
  if (!eta)
    throw domain_error("pseudospin_residual: delta2 imaginary at E = " + std::to_string(E));
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double lhs = (E - ctx.Mc2() - ctx.C_sym) * (p.D - ctx.Mc2() - E) +
                     a2hc2 * q.kappa * (q.kappa - 1) * cfg.d0;
  return lhs - a2hc2 * *eta * *eta;
}

SpinAuxiliary spin_auxiliary(const PotentialParams &p, const RelativisticContext &ctx,
                             const QuantumNumbers &q, double E, const ApproximationConfig &cfg) {
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  SpinAuxiliary aux{};
  aux.nu1_sq = (ctx.Mc2() + E - ctx.C_sym) * p.D / a2hc2;
  aux.omega1_sq = (E * E - ctx.Mc2() * ctx.Mc2() + ctx.C_sym * (ctx.Mc2() - E)) / a2hc2;
  const double arg =
      (1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) + 4.0 * b * b * aux.nu1_sq;
  if (arg < 0)
    throw unphysical_solution_error("spin_auxiliary: delta1 imaginary");
  aux.delta1 = 0.5 * (1.0 + std::sqrt(arg));
  const double eps_sq = aux.nu1_sq - aux.omega1_sq + q.kappa * (q.kappa + 1) * cfg.d0;
  if (eps_sq < 0)
    throw unphysical_solution_error("spin_auxiliary: epsilon^2 negative (unbound)");
  aux.epsilon = std::sqrt(eps_sq);
  return aux;
}

PseudospinAuxiliary pseudospin_auxiliary(const PotentialParams &p, const RelativisticContext &ctx,
                                         const QuantumNumbers &q, double E,
                                         const ApproximationConfig &cfg) {
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  PseudospinAuxiliary aux{};
  aux.nu2_sq = (ctx.Mc2() - E + ctx.C_sym) * p.D / a2hc2;
  aux.omega2_sq = (E * E - ctx.Mc2() * ctx.Mc2() - ctx.C_sym * (ctx.Mc2() + E)) / a2hc2;
  const double arg =
      (1.0 - 2.0 * q.kappa) * (1.0 - 2.0 * q.kappa) - 4.0 * b * b * aux.nu2_sq;
  if (arg < 0)
    throw unphysical_solution_error("pseudospin_auxiliary: delta2 imaginary");
  aux.delta2 = 0.5 * (1.0 + std::sqrt(arg));
  const double eps_sq = -aux.omega2_sq - aux.nu2_sq + q.kappa * (q.kappa - 1) * cfg.d0;
  if (eps_sq < 0)
    throw unphysical_solution_error("pseudospin_auxiliary: epsilon~^2 negative (unbound)");
  aux.epsilon_tilde = std::sqrt(eps_sq);
  return aux;
}

double spin_epsilon_value(const PotentialParams &p, const RelativisticContext &ctx,
                          const QuantumNumbers &q, double E) {
  const auto eps = spin_epsilon_expr(p, ctx, q, E);
  if (!eps)
    throw domain_error("spin_epsilon_value: delta1 imaginary");
  return *eps;
}

double pseudospin_epsilon_tilde_value(const PotentialParams &p, const RelativisticContext &ctx,
                                      const QuantumNumbers &q, double E) {
  const auto eta = pseudospin_eta_expr(p, ctx, q, E);
  if (!eta)
    throw domain_error("pseudospin_epsilon_tilde_value: delta2 imaginary");
  return -*eta;
}

EnergySolution spin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                           const QuantumNumbers &q, const ApproximationConfig &cfg) {
  p.validate();
  ctx.validate();
  q.validate();
  if (!(p.alpha > 0))
    throw domain_error("spin_energy: alpha must be positive");

  MaskedResidual res = [&](double E) -> std::optional<double> {
    if (!spin_epsilon_expr(p, ctx, q, E))
      return std::nullopt;
    return spin_residual(p, ctx, q, E, cfg);
  };
  auto physical = [&](double E) {
    const auto eps = spin_epsilon_expr(p, ctx, q, E);
    return eps && *eps > 0 && ctx.Mc2() + E - ctx.C_sym > 0;
  };
  EnergySolution sol = solve_window(p, ctx, res, physical, "spin_energy");
  sol.aux = spin_auxiliary(p, ctx, q, sol.energy, cfg);
  return sol;
}

EnergySolution pseudospin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                                 const QuantumNumbers &q, const ApproximationConfig &cfg) {
  p.validate();
  ctx.validate();
  q.validate();
  if (!(p.alpha > 0))
    throw domain_error("pseudospin_energy: alpha must be positive");

  MaskedResidual res = [&](double E) -> std::optional<double> {
    if (!pseudospin_eta_expr(p, ctx, q, E))
      return std::nullopt;
    return pseudospin_residual(p, ctx, q, E, cfg);
  };
  // Eq.-(53) branch: epsilon~ = -eta must be positive, otherwise the squared
  // equation is satisfied by a growing solution.
  auto physical = [&](double E) {
    const auto eta = pseudospin_eta_expr(p, ctx, q, E);
    return eta && *eta < 0;
  };
  EnergySolution sol = solve_window(p, ctx, res, physical, "pseudospin_energy");
  sol.aux = pseudospin_auxiliary(p, ctx, q, sol.energy, cfg);
  return sol;
}

double swave_spin_residual(const PotentialParams &p, const RelativisticContext &ctx, int n,
                           double E) {
  if (ctx.C_sym != 0.0)
    throw domain_error("swave_spin_residual: requires the exact symmetry limit C_s = 0");
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double delta =
      0.5 * (1.0 + std::sqrt(1.0 + 4.0 * (ctx.Mc2() + E) * p.D * b * b / a2hc2));
  const double t = (2.0 + b) * (ctx.Mc2() + E) * p.D * b / a2hc2 / (2.0 * (n + delta)) -
                   0.5 * (n + delta);
  // E^2 - M^2c^4 - D(Mc^2 + E) = -(hbar c alpha)^2 t^2
  return E * E - ctx.Mc2() * ctx.Mc2() - p.D * (ctx.Mc2() + E) + a2hc2 * t * t;
}

double swave_pseudospin_residual(const PotentialParams &p, const RelativisticContext &ctx, int n,
                                 double E) {
  if (ctx.C_sym != 0.0)
    throw domain_error("swave_pseudospin_residual: requires the exact symmetry limit C_ps = 0");
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double arg = 1.0 - 4.0 * (ctx.Mc2() - E) * p.D * b * b / a2hc2;
  if (arg < 0)
    throw domain_error("swave_pseudospin_residual: delta2 imaginary");
  const double delta2 = 0.5 * (1.0 + std::sqrt(arg));
  const double t = (2.0 + b) * (ctx.Mc2() - E) * p.D * b / a2hc2 / (2.0 * (n + delta2)) +
                   0.5 * (n + delta2);
  // E^2 - M^2c^4 + D(Mc^2 - E) = -(hbar c alpha)^2 t^2
  return E * E - ctx.Mc2() * ctx.Mc2() + p.D * (ctx.Mc2() - E) + a2hc2 * t * t;
}

double nonrel_energy(const PotentialParams &p, const NonRelContext &ctx, int n, int l,
                     const ApproximationConfig &cfg) {
  p.validate();
  ctx.validate();
  if (n < 0 || l < 0)
    throw domain_error("nonrel_energy: n and l must be non-negative");
  if (!(p.alpha > 0))
    throw domain_error("nonrel_energy: alpha must be positive");
  const double b = p.b();
  const double h2a2 = ctx.hbar * ctx.hbar * p.alpha * p.alpha;
  const double delta =
      0.5 * (1.0 + std::sqrt((1.0 + 2.0 * l) * (1.0 + 2.0 * l) + 8.0 * ctx.mu * p.D * b * b / h2a2));
  const double t = ctx.mu * (2.0 + b) * p.D * b / (h2a2 * (n + delta)) - 0.5 * (n + delta);
  return p.D + h2a2 / (2.0 * ctx.mu) * l * (l + 1) * cfg.d0 -
         h2a2 / (2.0 * ctx.mu) * t * t;
}

} // namespace gmorse
