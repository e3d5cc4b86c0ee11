#include "wavefunctions.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "specfun.hpp"

namespace gmorse {

namespace {

constexpr double kGridRmin = 1e-4;
constexpr double kTailLog = 36.0; // envelope cut ~ e^-36 < 1e-15 of peak, plus margin

void check_denominator(double den, const char *what) {
  if (std::abs(den) < 1e-12)
    throw singularity_error(std::string(what) + ": vanishing component denominator");
}

/// ln of the constant normalizing z^eps (1-z)^delta P_n^{(2eps, 2delta-1)}(1-2z)
/// on dr. Assembled in log space: the Gamma arguments reach a few hundred.
double ln_norm_jacobi_form(double alpha, double eps, double delta, int n) {
  if (!(eps > 0) || !(delta > 0))
    throw unphysical_solution_error("normalization requires eps > 0 and delta > 0");
  return 0.5 * (std::log(2.0 * alpha * eps) + std::log(n + eps + delta) - std::log(n + delta) +
                ln_gamma(n + 1.0) + ln_gamma(n + 2.0 * eps + 2.0 * delta) -
                ln_gamma(n + 2.0 * eps + 1.0) - ln_gamma(n + 2.0 * delta));
}

/// ln of the constant normalizing r^{K+1} e^{-eps r} L_n^{(2K+1)}(2 eps r) on dr.
double ln_norm_laguerre_form(double eps, double K, int n) {
  if (!(eps > 0))
    throw unphysical_solution_error("normalization requires eps > 0");
  return (K + 1.0) * std::log(2.0 * eps) +
         0.5 * (std::log(eps) + ln_gamma(n + 1.0) - std::log(n + K + 1.0) -
                ln_gamma(n + 2.0 * K + 2.0));
}

struct MorseShape {
  double alpha, eps, delta;
  int n;
  double ln_norm;

  double ln_envelope(double r) const {
    return ln_norm - eps * alpha * r + delta * std::log(-std::expm1(-alpha * r));
  }
  double primary(double r) const {
    const double z = std::exp(-alpha * r);
    return std::exp(ln_envelope(r)) * jacobi_poly(n, 2.0 * eps, 2.0 * delta - 1.0, 1.0 - 2.0 * z);
  }
  /// d(primary)/dr decomposed as c(r)*primary + derivative remainder.
  double derivative(double r, double primary_val) const {
    const double z = std::exp(-alpha * r);
    const double one_mz = -std::expm1(-alpha * r);
    double d = (alpha * delta * z / one_mz - alpha * eps) * primary_val;
    if (n >= 1)
      d += alpha * z * (n + 2.0 * eps + 2.0 * delta) * std::exp(ln_envelope(r)) *
           jacobi_poly(n - 1, 2.0 * eps + 1.0, 2.0 * delta, 1.0 - 2.0 * z);
    return d;
  }
};

struct KratzerShape {
  double eps, K;
  int n;
  double ln_norm;

  double ln_envelope(double r) const { return ln_norm + (K + 1.0) * std::log(r) - eps * r; }
  double primary(double r) const {
    return std::exp(ln_envelope(r)) * laguerre_poly(n, 2.0 * K + 1.0, 2.0 * eps * r);
  }
  double derivative(double r, double primary_val) const {
    double d = ((K + 1.0) / r - eps) * primary_val;
    if (n >= 1)
      d -= 2.0 * eps * std::exp(ln_envelope(r)) * laguerre_poly(n - 1, 2.0 * K + 2.0, 2.0 * eps * r);
    return d;
  }
};

std::vector<double> geometric_grid(double r_min, double r_max, int n_points) {
  if (n_points < 2)
    throw domain_error("grid needs at least two points");
  std::vector<double> r(static_cast<std::size_t>(n_points));
  const double ratio = std::log(r_max / r_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i)
    r[static_cast<std::size_t>(i)] = r_min * std::exp(ratio * i);
  return r;
}

} // namespace

std::vector<double> envelope_grid(double r_peak, double decay_rate, int n_points) {
  if (!(decay_rate > 0))
    throw domain_error("envelope_grid: decay rate must be positive");
  const double r_max = std::max(r_peak, kGridRmin) + kTailLog / decay_rate;
  return geometric_grid(kGridRmin, r_max, n_points);
}

double norm_integral(std::span<const double> r, std::span<const double> f) {
  if (r.size() != f.size() || r.size() < 3)
    throw domain_error("norm_integral: need matching grids with >= 3 points");
  // composite Simpson on non-uniform nodes, pairs of intervals at a time
  double total = 0.0;
  std::size_t i = 0;
  const std::size_t n = r.size();
  auto sq = [&](std::size_t k) { return f[k] * f[k]; };
  for (; i + 2 < n; i += 2) {
    const double h0 = r[i + 1] - r[i];
    const double h1 = r[i + 2] - r[i + 1];
    const double s = h0 + h1;
    total += s / 6.0 *
             ((2.0 - h1 / h0) * sq(i) + s * s / (h0 * h1) * sq(i + 1) + (2.0 - h0 / h1) * sq(i + 2));
  }
  if (i + 1 < n) // odd interval count: trapezoid on the final sliver
    total += 0.5 * (r[i + 1] - r[i]) * (sq(i) + sq(i + 1));
  return total;
}

RadialWavefunction gmp_spin_components(const PotentialParams &p, const RelativisticContext &ctx,
                                       const QuantumNumbers &q, double E,
                                       std::span<const double> grid,
                                       const ApproximationConfig &cfg) {
  const SpinAuxiliary aux = spin_auxiliary(p, ctx, q, E, cfg);
  const double eps = spin_epsilon_value(p, ctx, q, E); // = aux.epsilon at an exact root
  if (!(eps > 0))
    throw unphysical_solution_error("gmp_spin_components: epsilon must be positive");
  const double den = ctx.Mc2() + E - ctx.C_sym;
  check_denominator(den, "gmp_spin_components");

  MorseShape shape{p.alpha, eps, aux.delta1, q.n,
                   ln_norm_jacobi_form(p.alpha, eps, aux.delta1, q.n)};

  RadialWavefunction w;
  w.family = WavefunctionFamily::gmp_spin;
  w.ln_norm = shape.ln_norm;
  w.norm_constant = std::exp(shape.ln_norm);
  w.r.assign(grid.begin(), grid.end());
  w.F.resize(grid.size());
  w.G.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double F = shape.primary(r);
    w.F[i] = F;
    w.G[i] = (shape.derivative(r, F) + q.kappa / r * F) / den;
  }
  return w;
}

RadialWavefunction gmp_pseudospin_components(const PotentialParams &p,
                                             const RelativisticContext &ctx,
                                             const QuantumNumbers &q, double E,
                                             std::span<const double> grid,
                                             const ApproximationConfig &cfg) {
  const PseudospinAuxiliary aux = pseudospin_auxiliary(p, ctx, q, E, cfg);
  const double eps = pseudospin_epsilon_tilde_value(p, ctx, q, E);
  if (!(eps > 0))
    throw unphysical_solution_error("gmp_pseudospin_components: epsilon~ must be positive");
  const double den = ctx.Mc2() - E + ctx.C_sym;
  check_denominator(den, "gmp_pseudospin_components");

  MorseShape shape{p.alpha, eps, aux.delta2, q.n,
                   ln_norm_jacobi_form(p.alpha, eps, aux.delta2, q.n)};

  RadialWavefunction w;
  w.family = WavefunctionFamily::gmp_pseudospin;
  w.ln_norm = shape.ln_norm;
  w.norm_constant = std::exp(shape.ln_norm);
  w.r.assign(grid.begin(), grid.end());
  w.F.resize(grid.size());
  w.G.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double G = shape.primary(r);
    w.G[i] = G;
    w.F[i] = (shape.derivative(r, G) - q.kappa / r * G) / den;
  }
  return w;
}

RadialWavefunction kratzer_spin_components(const PotentialParams &p, const RelativisticContext &ctx,
                                           const QuantumNumbers &q, double E,
                                           std::span<const double> grid) {
  const double P = ctx.Mc2() + E - ctx.C_sym;
  const double gamma_sq =
      (1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) + 4.0 * p.r_e * p.r_e / ctx.hc2() * P * p.D;
  if (gamma_sq < 0)
    throw unphysical_solution_error("kratzer_spin_components: gamma imaginary");
  const double W = (ctx.Mc2() - E + p.D) * P;
  if (W < 0)
    throw unphysical_solution_error("kratzer_spin_components: epsilon imaginary");
  check_denominator(P, "kratzer_spin_components");

  const double K = 0.5 * (std::sqrt(gamma_sq) - 1.0);
  const double eps = std::sqrt(W / ctx.hc2());
  KratzerShape shape{eps, K, q.n, ln_norm_laguerre_form(eps, K, q.n)};

  RadialWavefunction w;
  w.family = WavefunctionFamily::kratzer_spin;
  w.ln_norm = shape.ln_norm;
  w.norm_constant = std::exp(shape.ln_norm);
  w.r.assign(grid.begin(), grid.end());
  w.F.resize(grid.size());
  w.G.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double F = shape.primary(r);
    w.F[i] = F;
    w.G[i] = (shape.derivative(r, F) + q.kappa / r * F) / P;
  }
  return w;
}

RadialWavefunction kratzer_pseudospin_components(const PotentialParams &p,
                                                 const RelativisticContext &ctx,
                                                 const QuantumNumbers &q, double E,
                                                 std::span<const double> grid) {
  const double M = ctx.Mc2();
  const double Pm = M - E + ctx.C_sym;
  const double gamma_sq =
      (1.0 - 2.0 * q.kappa) * (1.0 - 2.0 * q.kappa) - 4.0 * p.D * p.r_e * p.r_e / ctx.hc2() * Pm;
  if (gamma_sq < 0)
    throw unphysical_solution_error("kratzer_pseudospin_components: gamma~ imaginary");
  const double eps_sq = (-p.D * Pm - (E * E - M * M - ctx.C_sym * (M + E))) / ctx.hc2();
  if (eps_sq < 0)
    throw unphysical_solution_error("kratzer_pseudospin_components: epsilon~ imaginary");
  check_denominator(Pm, "kratzer_pseudospin_components");

  const double K = 0.5 * (std::sqrt(gamma_sq) - 1.0);
  const double eps = std::sqrt(eps_sq);
  KratzerShape shape{eps, K, q.n, ln_norm_laguerre_form(eps, K, q.n)};

  RadialWavefunction w;
  w.family = WavefunctionFamily::kratzer_pseudospin;
  w.ln_norm = shape.ln_norm;
  w.norm_constant = std::exp(shape.ln_norm);
  w.r.assign(grid.begin(), grid.end());
  w.F.resize(grid.size());
  w.G.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double G = shape.primary(r);
    w.G[i] = G;
    w.F[i] = (shape.derivative(r, G) - q.kappa / r * G) / Pm;
  }
  return w;
}

namespace {

/// delta~ and eta~ of the non-relativistic GMP solution.
std::pair<double, double> nonrel_shape_params(const PotentialParams &p, const NonRelContext &ctx,
                                              int n, int l) {
  const double b = p.b();
  const double h2a2 = ctx.hbar * ctx.hbar * p.alpha * p.alpha;
  const double delta =
      0.5 * (1.0 + std::sqrt((1.0 + 2.0 * l) * (1.0 + 2.0 * l) + 8.0 * ctx.mu * p.D * b * b / h2a2));
  const double eta = ctx.mu * (2.0 + b) * p.D * b / (h2a2 * (n + delta)) - 0.5 * (n + delta);
  return {delta, eta};
}

} // namespace

RadialWavefunction nonrel_wavefunction(const PotentialParams &p, const NonRelContext &ctx, int n,
                                       int l, std::span<const double> grid,
                                       const ApproximationConfig &cfg) {
  (void)cfg; // d0 does not enter the wavefunction shape
  const auto [delta, eta] = nonrel_shape_params(p, ctx, n, l);
  if (!(eta > 0))
    throw unphysical_solution_error("nonrel_wavefunction: eta~ must be positive (unbound)");

  MorseShape shape{p.alpha, eta, delta, n, ln_norm_jacobi_form(p.alpha, eta, delta, n)};
  RadialWavefunction w;
  w.family = WavefunctionFamily::nonrel_gmp;
  w.ln_norm = shape.ln_norm;
  w.norm_constant = std::exp(shape.ln_norm);
  w.r.assign(grid.begin(), grid.end());
  w.F.resize(grid.size());
  w.G.assign(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i)
    w.F[i] = shape.primary(grid[i]);
  return w;
}

RadialWavefunction kratzer_nonrel_wavefunction(const PotentialParams &p, const NonRelContext &ctx,
                                               int n, int l, std::span<const double> grid) {
  const double h2 = ctx.hbar * ctx.hbar;
  const double L =
      0.5 * (std::sqrt((1.0 + 2.0 * l) * (1.0 + 2.0 * l) + 8.0 * ctx.mu * p.D * p.r_e * p.r_e / h2) - 1.0);
  const double eps = 2.0 * ctx.mu * p.D * p.r_e / (h2 * (n + L + 1.0));
  KratzerShape shape{eps, L, n, ln_norm_laguerre_form(eps, L, n)};

  RadialWavefunction w;
  w.family = WavefunctionFamily::nonrel_kratzer;
  w.ln_norm = shape.ln_norm;
  w.norm_constant = std::exp(shape.ln_norm);
  w.r.assign(grid.begin(), grid.end());
  w.F.resize(grid.size());
  w.G.assign(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i)
    w.F[i] = shape.primary(grid[i]);
  return w;
}

RadialWavefunction s_wave_components(const PotentialParams &p, const RelativisticContext &ctx,
                                     int n, Symmetry mode, std::span<const double> grid,
                                     const ApproximationConfig &cfg) {
  if (ctx.C_sym != 0.0)
    throw domain_error("s_wave_components: requires the exact symmetry limit C_sym = 0");
  QuantumNumbers q;
  q.n = n;
  q.symmetry = mode;
  if (mode == Symmetry::spin) {
    q.kappa = -1;
    const EnergySolution sol = spin_energy(p, ctx, q, cfg);
    // delta and eta from the dedicated s-wave expressions; the kappa(kappa+1)
    // terms are identically zero here so these agree with the general path.
    const double b = p.b();
    const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
    const double delta =
        0.5 * (1.0 + std::sqrt(1.0 + 4.0 * (ctx.Mc2() + sol.energy) * p.D * b * b / a2hc2));
    const double eta =
        (2.0 + b) * (ctx.Mc2() + sol.energy) * p.D * b / a2hc2 / (2.0 * (n + delta)) -
        0.5 * (n + delta);
    MorseShape shape{p.alpha, eta, delta, n, ln_norm_jacobi_form(p.alpha, eta, delta, n)};
    const double den = ctx.Mc2() + sol.energy;
    check_denominator(den, "s_wave_components");
    RadialWavefunction w;
    w.family = WavefunctionFamily::gmp_spin;
    w.ln_norm = shape.ln_norm;
    w.norm_constant = std::exp(shape.ln_norm);
    w.r.assign(grid.begin(), grid.end());
    w.F.resize(grid.size());
    w.G.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid[i];
      const double F = shape.primary(r);
      w.F[i] = F;
      w.G[i] = (shape.derivative(r, F) - F / r) / den;
    }
    return w;
  }
  if (mode == Symmetry::pseudospin) {
    q.kappa = 1;
    const EnergySolution sol = pseudospin_energy(p, ctx, q, cfg);
    const double b = p.b();
    const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
    const double arg = 1.0 - 4.0 * (ctx.Mc2() - sol.energy) * p.D * b * b / a2hc2;
    if (arg < 0)
      throw unphysical_solution_error("s_wave_components: delta2 imaginary");
    const double delta2 = 0.5 * (1.0 + std::sqrt(arg));
    const double eta2 =
        -((2.0 + b) * (ctx.Mc2() - sol.energy) * p.D * b / a2hc2 / (2.0 * (n + delta2)) +
          0.5 * (n + delta2));
    MorseShape shape{p.alpha, eta2, delta2, n, ln_norm_jacobi_form(p.alpha, eta2, delta2, n)};
    const double den = ctx.Mc2() - sol.energy;
    check_denominator(den, "s_wave_components");
    RadialWavefunction w;
    w.family = WavefunctionFamily::gmp_pseudospin;
    w.ln_norm = shape.ln_norm;
    w.norm_constant = std::exp(shape.ln_norm);
    w.r.assign(grid.begin(), grid.end());
    w.F.resize(grid.size());
    w.G.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid[i];
      const double G = shape.primary(r);
      w.G[i] = G;
      w.F[i] = (shape.derivative(r, G) - G / r) / den;
    }
    return w;
  }
  throw domain_error("s_wave_components: mode must be spin or pseudospin");
}

std::vector<double> default_grid(const PotentialParams &p, const RelativisticContext &ctx,
                                 const QuantumNumbers &q, double E, WavefunctionFamily family,
                                 const ApproximationConfig &cfg, int n_points) {
  switch (family) {
  case WavefunctionFamily::gmp_spin: {
    const SpinAuxiliary aux = spin_auxiliary(p, ctx, q, E, cfg);
    const double zstar = aux.epsilon / (aux.epsilon + aux.delta1);
    return envelope_grid(-std::log(zstar) / p.alpha, aux.epsilon * p.alpha, n_points);
  }
  case WavefunctionFamily::gmp_pseudospin: {
    const PseudospinAuxiliary aux = pseudospin_auxiliary(p, ctx, q, E, cfg);
    const double zstar = aux.epsilon_tilde / (aux.epsilon_tilde + aux.delta2);
    return envelope_grid(-std::log(zstar) / p.alpha, aux.epsilon_tilde * p.alpha, n_points);
  }
  case WavefunctionFamily::kratzer_spin: {
    const double P = ctx.Mc2() + E - ctx.C_sym;
    const double gamma = std::sqrt((1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) +
                                   4.0 * p.r_e * p.r_e / ctx.hc2() * P * p.D);
    const double K = 0.5 * (gamma - 1.0);
    const double eps = std::sqrt(std::max(1e-300, (ctx.Mc2() - E + p.D) * P / ctx.hc2()));
    return envelope_grid((K + 1.0) / eps, eps, n_points);
  }
  case WavefunctionFamily::kratzer_pseudospin: {
    const double M = ctx.Mc2();
    const double Pm = M - E + ctx.C_sym;
    const double gamma = std::sqrt((1.0 - 2.0 * q.kappa) * (1.0 - 2.0 * q.kappa) -
                                   4.0 * p.D * p.r_e * p.r_e / ctx.hc2() * Pm);
    const double K = 0.5 * (gamma - 1.0);
    const double eps =
        std::sqrt(std::max(1e-300, (-p.D * Pm - (E * E - M * M - ctx.C_sym * (M + E))) / ctx.hc2()));
    return envelope_grid((K + 1.0) / eps, eps, n_points);
  }
  default:
    throw domain_error("default_grid: non-relativistic families use default_grid_nonrel");
  }
}

std::vector<double> default_grid_nonrel(const PotentialParams &p, const NonRelContext &ctx, int n,
                                        int l, WavefunctionFamily family,
                                        const ApproximationConfig &cfg, int n_points) {
  (void)cfg;
  if (family == WavefunctionFamily::nonrel_gmp) {
    const auto [delta, eta] = nonrel_shape_params(p, ctx, n, l);
    if (!(eta > 0))
      throw unphysical_solution_error("default_grid_nonrel: eta~ must be positive");
    const double zstar = eta / (eta + delta);
    return envelope_grid(-std::log(zstar) / p.alpha, eta * p.alpha, n_points);
  }
  if (family == WavefunctionFamily::nonrel_kratzer) {
    const double h2 = ctx.hbar * ctx.hbar;
    const double L = 0.5 * (std::sqrt((1.0 + 2.0 * l) * (1.0 + 2.0 * l) +
                                      8.0 * ctx.mu * p.D * p.r_e * p.r_e / h2) -
                            1.0);
    const double eps = 2.0 * ctx.mu * p.D * p.r_e / (h2 * (n + L + 1.0));
    return envelope_grid((L + 1.0) / eps, eps, n_points);
  }
  throw domain_error("default_grid_nonrel: relativistic families use default_grid");
}

} // namespace gmorse
