#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "gmp_spectra.hpp"
#include "kratzer_spectra.hpp"

namespace gmorse {

namespace {

/// Number of eigenvalues of the tridiagonal FD matrix strictly below lambda
/// (Sturm count via the LDL^T pivot recurrence; off-diagonal is constant).
int sturm_count(const std::vector<double> &diag, double off_sq, double lambda) {
  int count = 0;
  double q = diag[0] - lambda;
  if (q < 0)
    ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (q == 0.0)
      q = 1e-300;
    q = (diag[i] - lambda) - off_sq / q;
    if (q < 0)
      ++count;
  }
  return count;
}

/// k-th (0-based) eigenvalue by bisection on the Sturm count.
double sturm_eigenvalue(const std::vector<double> &diag, double off, int k) {
  const double off_sq = off * off;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double d : diag) {
    lo = std::min(lo, d - 2.0 * std::abs(off));
    hi = std::max(hi, d + 2.0 * std::abs(off));
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi)
      break;
    if (sturm_count(diag, off_sq, mid) >= k + 1)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-13 * std::max(1.0, std::abs(lo)))
      break;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> fd_eigenvalues(const std::function<double(double)> &U, double r_max, int n,
                                   int count) {
  const double h = r_max / (n + 1);
  std::vector<double> diag(static_cast<std::size_t>(n));
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < n; ++i)
    diag[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + U((i + 1) * h);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    out.push_back(sturm_eigenvalue(diag, -inv_h2, k));
  return out;
}

} // namespace

RadialEigenvalues radial_eigenvalues(const RadialProblem &rp, int count) {
  if (count < 1)
    throw domain_error("radial_eigenvalues: count must be >= 1");
  if (!(rp.r_max > 0) || rp.points < 10)
    throw domain_error("radial_eigenvalues: bad mesh");

  const auto coarse = fd_eigenvalues(rp.effective_potential, rp.r_max, rp.points, count);
  const auto fine = fd_eigenvalues(rp.effective_potential, rp.r_max, 2 * rp.points + 1, count);

  RadialEigenvalues out;
  const double threshold = rp.effective_potential(rp.r_max);
  for (int k = 0; k < count; ++k) {
    const double e = (4.0 * fine[static_cast<std::size_t>(k)] - coarse[static_cast<std::size_t>(k)]) / 3.0;
    if (e >= threshold) {
      out.truncated = true;
      break;
    }
    out.values.push_back(e);
  }
  return out;
}

namespace {

/// Box size from the state's decay rate: classical outer region plus enough
/// tail for the Dirichlet wall to be invisible.
double pick_r_max(double r_e, double decay) {
  const double r = r_e + 35.0 / std::max(decay, 0.05);
  return std::clamp(r, 40.0, 700.0);
}

} // namespace

double nonrel_oracle_energy(const PotentialParams &p, const NonRelContext &ctx, int n, int l,
                            PotentialKind kind) {
  p.validate();
  ctx.validate();
  const double mass_factor = 2.0 * ctx.mu / (ctx.hbar * ctx.hbar);

  // decay estimate from the closed-form energy (used only to size the box)
  double e_est;
  try {
    e_est = (kind == PotentialKind::gmp) ? nonrel_energy(p, ctx, n, l)
                                         : kratzer_nonrel_energy(p, ctx, n, l);
  } catch (const std::exception &) {
    e_est = 0.5 * p.D;
  }
  const double decay = std::sqrt(std::max(0.2, mass_factor * (p.D - e_est)));

  RadialProblem rp;
  rp.effective_potential = [=, &p](double r) {
    return mass_factor * potential_value(kind, r, p) + l * (l + 1.0) / (r * r);
  };
  rp.r_max = pick_r_max(p.r_e, decay);
  rp.points = 20000;

  const auto eig = radial_eigenvalues(rp, n + 1);
  if (static_cast<int>(eig.values.size()) <= n)
    throw no_bound_state_error("nonrel_oracle_energy: state above the discrete spectrum");
  return eig.values[static_cast<std::size_t>(n)] / mass_factor;
}

double dirac_effective_eigenvalue(const PotentialParams &p, const RelativisticContext &ctx,
                                  const QuantumNumbers &q, double initial_guess) {
  p.validate();
  ctx.validate();
  q.validate();
  const double hc2 = ctx.hc2();
  const double M = ctx.Mc2();
  const bool pseudo = q.symmetry == Symmetry::pseudospin;
  const double ll = pseudo ? q.kappa * (q.kappa - 1.0) : q.kappa * (q.kappa + 1.0);

  const double decay =
      std::sqrt(std::max(0.2, std::abs((M + p.D - initial_guess) * (M + initial_guess - ctx.C_sym)) / hc2));
  const double r_max = pick_r_max(p.r_e, decay);

  auto frozen_eigenvalue = [&](double E) {
    RadialProblem rp;
    rp.effective_potential = [=, &p](double r) {
      const double v = gmp(r, p);
      const double coef = pseudo ? -(M - E + ctx.C_sym) : (M + E - ctx.C_sym);
      return ll / (r * r) + coef * v / hc2;
    };
    rp.r_max = r_max;
    rp.points = 12000;
    const auto eig = radial_eigenvalues(rp, q.n + 1);
    if (static_cast<int>(eig.values.size()) <= q.n)
      throw no_bound_state_error("dirac_effective_eigenvalue: eigenvalue above box threshold");
    return eig.values[static_cast<std::size_t>(q.n)];
  };
  auto rhs = [&](double E) {
    return pseudo ? (E * E - M * M - ctx.C_sym * (M + E)) / hc2
                  : (E * E - M * M + ctx.C_sym * (M - E)) / hc2;
  };

  double e0 = initial_guess;
  double e1 = initial_guess + 1e-3;
  double g0 = frozen_eigenvalue(e0) - rhs(e0);
  for (int it = 0; it < 200; ++it) {
    const double g1 = frozen_eigenvalue(e1) - rhs(e1);
    const double dg = g1 - g0;
    if (dg == 0.0)
      break;
    const double e2 = e1 - g1 * (e1 - e0) / dg;
    e0 = e1;
    g0 = g1;
    e1 = e2;
    if (std::abs(e1 - e0) < 1e-9)
      return e1;
  }
  throw convergence_error("dirac_effective_eigenvalue: secant did not converge in 200 iterations");
}

std::vector<ApproximationRow> approximation_report(double D, const NonRelContext &ctx,
                                                   const std::vector<StateRequest> &states,
                                                   const ApproximationConfig &cfg) {
  std::vector<ApproximationRow> rows;
  rows.reserve(states.size());
  for (const auto &st : states) {
    ApproximationRow row;
    row.state = st.label;
    row.alpha = st.alpha;
    row.r_e = st.r_e;
    row.n = st.n;
    row.l = st.l;
    PotentialParams p{D, st.alpha, st.r_e};
    try {
      row.closed_form = nonrel_energy(p, ctx, st.n, st.l, cfg);
      row.oracle = nonrel_oracle_energy(p, ctx, st.n, st.l);
      row.abs_delta = std::abs(row.closed_form - row.oracle);
    } catch (const std::exception &e) {
      row.failed = true;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace gmorse
