#include "kratzer_spectra.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <optional>
#include <string>

#include "bracketing.hpp"
#include "errors.hpp"

namespace gmorse {

namespace {

using cld = std::complex<long double>;


std::array<cld, 3> cubic_roots_ld(long double a, long double b, long double c, long double d,
                                  CubicCase *which) {
  const long double f = c / a - b * b / (3.0L * a * a);
  const long double g =
      2.0L * b * b * b / (27.0L * a * a * a) - b * c / (3.0L * a * a) + d / a;
  const long double h = 0.25L * g * g + f * f * f / 27.0L;
  const long double shift = b / (3.0L * a);

  if (f == 0.0L && g == 0.0L) {
    if (which)
      *which = CubicCase::triple_root;
    const cld r = cld(-std::cbrt((double)(d / a)), 0.0L);
    return {r, r, r};
  }
  if (h > 0.0L) {
    // one real root, two complex conjugates
    if (which)
      *which = CubicCase::one_real;
    const long double sq = std::sqrt(h);
    const long double S = std::cbrt((double)(-0.5L * g + sq));
    const long double U = std::cbrt((double)(-0.5L * g - sq));
    const cld r1(S + U - shift, 0.0L);
    const cld r2(-0.5L * (S + U) - shift, 0.5L * std::sqrt(3.0L) * (S - U));
    return {r1, r2, std::conj(r2)};
  }
  // three real roots (h <= 0)
  if (which)
    *which = CubicCase::three_real;
  const long double s = std::sqrt(0.25L * g * g - h); // = sqrt(-f^3/27)
  long double cosarg = (s != 0.0L) ? -0.5L * g / s : 1.0L;
  cosarg = std::clamp(cosarg, -1.0L, 1.0L);
  const long double k = std::acos(cosarg);
  const long double R = std::cbrt((double)s);
  const long double H = std::cos(k / 3.0L);
  const long double G = std::sqrt(3.0L) * std::sin(k / 3.0L);
  return {cld(2.0L * R * H - shift, 0.0L), cld(-R * (H + G) - shift, 0.0L),
          cld(-R * (H - G) - shift, 0.0L)};
}

cld quartic_eval(const std::array<long double, 5> &monic, cld x) {
  // monic[0] = 1 leading; Horner
  cld v(monic[0], 0.0L);
  for (int i = 1; i < 5; ++i)
    v = v * x + cld(monic[i], 0.0L);
  return v;
}

cld quartic_deriv(const std::array<long double, 5> &monic, cld x) {
  cld v(4.0L * monic[0], 0.0L);
  v = v * x + cld(3.0L * monic[1], 0.0L);
  v = v * x + cld(2.0L * monic[2], 0.0L);
  v = v * x + cld(monic[3], 0.0L);
  return v;
}

} // namespace

std::array<std::complex<double>, 3> solve_cubic(double a, double b, double c, double d,
                                                CubicCase *which) {
  if (a == 0.0)
    throw degenerate_degree_error("solve_cubic: leading coefficient is zero");
  const auto r = cubic_roots_ld(a, b, c, d, which);
  return {std::complex<double>((double)r[0].real(), (double)r[0].imag()),
          std::complex<double>((double)r[1].real(), (double)r[1].imag()),
          std::complex<double>((double)r[2].real(), (double)r[2].imag())};
}

std::array<std::complex<double>, 4> solve_quartic(const QuarticCoefficients &qc,
                                                  CubicCase *which) {
  if (qc.a4 == 0.0)
    throw degenerate_degree_error("solve_quartic: leading coefficient is zero");

  const long double a3 = (long double)qc.a3 / qc.a4;
  const long double a2 = (long double)qc.a2 / qc.a4;
  const long double a1 = (long double)qc.a1 / qc.a4;
  const long double a0 = (long double)qc.a0 / qc.a4;

  // depressed quartic y^4 + u y^2 + v y + w, x = y - a3/4
  const long double u = a2 - 3.0L / 8.0L * a3 * a3;
  const long double v = a1 + a3 * a3 * a3 / 8.0L - 0.5L * a3 * a2;
  const long double w =
      a0 - 3.0L / 256.0L * a3 * a3 * a3 * a3 + a3 * a3 * a2 / 16.0L - 0.25L * a3 * a1;

  // resolvent cubic z^3 + (u/2) z^2 + (u^2 - 4w)/16 z - v^2/64
  CubicCase cc;
  const auto z = cubic_roots_ld(1.0L, 0.5L * u, (u * u - 4.0L * w) / 16.0L, -v * v / 64.0L, &cc);
  if (which)
    *which = cc;

  cld s2, s3;
  switch (cc) {
  case CubicCase::three_real: {
    // pick the two roots of largest magnitude ("the two non-zero roots")
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return std::abs(z[i].real()) > std::abs(z[j].real()); });
    s2 = std::sqrt(z[idx[0]]);
    s3 = std::sqrt(z[idx[1]]);
    break;
  }
  case CubicCase::one_real:
    s2 = std::sqrt(z[1]); // the two complex-conjugate roots
    s3 = std::sqrt(z[2]);
    break;
  case CubicCase::triple_root:
    s2 = std::sqrt(z[0]);
    s3 = std::sqrt(z[1]);
    break;
  }

  const cld prod = s2 * s3;
  const cld s1 = (std::abs(prod) > 0.0L) ? cld(-v / 8.0L, 0.0L) / prod : cld(0.0L, 0.0L);
  const long double shift = 0.25L * a3;

  std::array<cld, 4> y = {s2 + s3 + s1, s2 - s3 - s1, -s2 + s3 - s1, -s2 - s3 + s1};

  const std::array<long double, 5> monic = {1.0L, a3, a2, a1, a0};
  std::array<std::complex<double>, 4> out;
  for (int i = 0; i < 4; ++i) {
    cld x = y[i] - cld(shift, 0.0L);
    for (int it = 0; it < 6; ++it) { // Newton polish on the monic quartic
      const cld pv = quartic_eval(monic, x);
      const cld dv = quartic_deriv(monic, x);
      if (std::abs(dv) == 0.0L)
        break;
      const cld step = pv / dv;
      x -= step;
      if (std::abs(step) < 1e-22L * (1.0L + std::abs(x)))
        break;
    }
    // roots of a real quartic come in conjugate pairs; snap tiny imaginary parts
    if (std::abs(x.imag()) < 1e-13L * (1.0L + std::abs(x.real())))
      x = cld(x.real(), 0.0L);
    out[i] = std::complex<double>((double)x.real(), (double)x.imag());
  }
  return out;
}

QuarticCoefficients build_quartic_coefficients(const PotentialParams &p,
                                               const RelativisticContext &ctx,
                                               const QuantumNumbers &q) {
  const double M = ctx.Mc2();
  const double Cs = ctx.C_sym;
  const double D = p.D;
  const double qq = 4.0 * p.r_e * p.r_e / ctx.hc2(); // (2 r_e / hbar c)^2
  const double Nn = 2.0 * q.n + 1.0;
  const double Nk = 2.0 * q.kappa + 1.0;
  const double dn2 = Nn * Nn - Nk * Nk;

  QuarticCoefficients a;
  a.a4 = qq * qq * D * D;
  a.a3 = 2.0 * qq * D * (Nk * Nk - Nn * Nn - qq * D * Cs);
  a.a2 = dn2 * dn2 + 2.0 * qq * D * (D + M + Cs) * dn2 + 4.0 * qq * D * D * Nn * Nn +
         qq * qq * D * D * (Cs * Cs + 2.0 * M * Cs - 2.0 * M * M);
  a.a1 = 2.0 * qq * qq * D * D * M * Cs * (M - Cs) - 2.0 * (D + M) * dn2 * dn2 +
         2.0 * qq * D * (M * M - 2.0 * M * Cs - D * Cs) * dn2 -
         4.0 * qq * D * D * (D + Cs) * Nn * Nn;
  const double t0 = qq * D * M * M - (D + M) * dn2;
  a.a0 = t0 * t0 - 4.0 * qq * D * D * (M - Cs) * (D + M) * Nn * Nn +
         qq * qq * D * D * M * M * Cs * (Cs - 2.0 * M) + 2.0 * qq * D * M * Cs * (D + M) * dn2;
  return a;
}

namespace {

std::optional<double> kratzer_spin_res_opt(const PotentialParams &p,
                                           const RelativisticContext &ctx,
                                           const QuantumNumbers &q, double E) {
  const double qq = 4.0 * p.r_e * p.r_e / ctx.hc2();
  const double Nn = 2.0 * q.n + 1.0;
  const double Nk = 2.0 * q.kappa + 1.0;
  const double P = ctx.Mc2() + E - ctx.C_sym;
  const double arg = Nk * Nk + qq * p.D * P;
  if (arg < 0)
    return std::nullopt;
  const double denom = Nn + std::sqrt(arg);
  return (ctx.Mc2() - E + p.D) - qq * p.D * p.D * P / (denom * denom);
}

std::optional<double> kratzer_pseudo_res_opt(const PotentialParams &p,
                                             const RelativisticContext &ctx,
                                             const QuantumNumbers &q, double E) {
  const double M = ctx.Mc2();
  const double Cps = ctx.C_sym;
  const double arg = (1.0 - 2.0 * q.kappa) * (1.0 - 2.0 * q.kappa) -
                     4.0 * p.D * p.r_e * p.r_e / ctx.hc2() * (M - E + Cps);
  if (arg < 0)
    return std::nullopt;
  const double Kt = 0.5 * (std::sqrt(arg) - 1.0);
  const double lhs = E * E - M * M - Cps * (M + E);
  const double t = p.D * p.r_e * (M - E + Cps) / (q.n + Kt + 1.0);
  return lhs + p.D * (M - E + Cps) + t * t / ctx.hc2();
}

} // namespace

double kratzer_spin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                             const QuantumNumbers &q, double E) {
  const auto r = kratzer_spin_res_opt(p, ctx, q, E);
  if (!r)
    throw domain_error("kratzer_spin_residual: gamma imaginary at E = " + std::to_string(E));
  return *r;
}

double kratzer_pseudospin_residual(const PotentialParams &p, const RelativisticContext &ctx,
                                   const QuantumNumbers &q, double E) {
  const auto r = kratzer_pseudo_res_opt(p, ctx, q, E);
  if (!r)
    throw domain_error("kratzer_pseudospin_residual: gamma~ imaginary at E = " + std::to_string(E));
  return *r;
}

double kratzer_nu_lambda_residual(const PotentialParams &p, const RelativisticContext &ctx,
                                  const QuantumNumbers &q, double E) {
  const double M = ctx.Mc2();
  const double P = M + E - ctx.C_sym;
  const double W = (M - E + p.D) * P;
  if (W < 0 || P < 0)
    throw domain_error("kratzer_nu_lambda_residual: epsilon imaginary");
  const double eps = std::sqrt(W) / std::sqrt(ctx.hc2());
  const double gamma =
      std::sqrt((1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) + 4.0 * p.r_e * p.r_e / ctx.hc2() * P * p.D);
  const double lambda = 2.0 * p.r_e / ctx.hc2() * P * p.D - (1.0 + gamma) * eps;
  const double lambda_n = 2.0 * q.n * eps;
  return lambda - lambda_n;
}

namespace {

EnergySolution solve_kratzer(const PotentialParams &p, const RelativisticContext &ctx,
                             const MaskedResidual &res,
                             const std::function<bool(double)> &physical, const char *what) {
  const double lo = ctx.C_sym - ctx.Mc2() + 1e-6;
  const double hi = ctx.Mc2() + p.D;
  std::vector<double> roots;
  std::vector<Bracket> brs;
  for (const Bracket &br : scan_sign_changes(res, lo, hi)) {
    const double root = bisect(res, br);
    if (physical(root)) {
      roots.push_back(root);
      brs.push_back(br);
    }
  }
  if (roots.empty())
    throw no_bound_state_error(std::string(what) + ": no physical root in the window");
  if (roots.size() > 1) {
    std::string msg = std::string(what) + ": multiple physical roots:";
    for (double r : roots)
      msg += " " + std::to_string(r);
    throw ambiguous_root_error(msg, roots);
  }
  EnergySolution sol;
  sol.energy = roots.front();
  sol.residual = res(sol.energy).value_or(0.0);
  sol.bracket_lo = brs.front().lo;
  sol.bracket_hi = brs.front().hi;
  return sol;
}

KratzerAuxiliary kratzer_aux(const PotentialParams &p, const RelativisticContext &ctx,
                             const QuantumNumbers &q, double E, bool pseudo) {
  KratzerAuxiliary aux{};
  aux.q = 4.0 * p.r_e * p.r_e / ctx.hc2();
  aux.N_n = 2 * q.n + 1;
  aux.N_kappa = 2 * q.kappa + 1;
  const double M = ctx.Mc2();
  if (!pseudo) {
    const double P = M + E - ctx.C_sym;
    aux.gamma = std::sqrt((1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) + aux.q * p.D * P);
    aux.epsilon_k = std::sqrt(std::max(0.0, (M - E + p.D) * P)) / std::sqrt(ctx.hc2());
  } else {
    const double Pm = M - E + ctx.C_sym;
    aux.gamma = std::sqrt((1.0 - 2.0 * q.kappa) * (1.0 - 2.0 * q.kappa) -
                          4.0 * p.D * p.r_e * p.r_e / ctx.hc2() * Pm);
    const double eps_sq = -p.D * Pm - (E * E - M * M - ctx.C_sym * (M + E));
    aux.epsilon_k = std::sqrt(std::max(0.0, eps_sq)) / std::sqrt(ctx.hc2());
  }
  aux.K = 0.5 * (aux.gamma - 1.0);
  return aux;
}

} // namespace

EnergySolution kratzer_spin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                                   const QuantumNumbers &q) {
  p.validate();
  ctx.validate();
  q.validate();

  MaskedResidual res = [&](double E) { return kratzer_spin_res_opt(p, ctx, q, E); };
  auto physical = [&](double E) { return ctx.Mc2() + E - ctx.C_sym > 0; };
  EnergySolution sol = solve_kratzer(p, ctx, res, physical, "kratzer_spin_energy");

  // cross-check: the root must appear among the closed-form quartic roots
  const auto roots = solve_quartic(build_quartic_coefficients(p, ctx, q));
  double best = std::numeric_limits<double>::infinity();
  for (const auto &r : roots)
    if (r.imag() == 0.0)
      best = std::min(best, std::abs(r.real() - sol.energy));
  if (best > 1e-9 * std::max(1.0, std::abs(sol.energy)))
    throw convergence_error("kratzer_spin_energy: transcendental root not among quartic roots");

  sol.aux = kratzer_aux(p, ctx, q, sol.energy, false);
  return sol;
}

EnergySolution kratzer_pseudospin_energy(const PotentialParams &p, const RelativisticContext &ctx,
                                         const QuantumNumbers &q) {
  p.validate();
  ctx.validate();
  q.validate();

  MaskedResidual res = [&](double E) { return kratzer_pseudo_res_opt(p, ctx, q, E); };
  // E = Mc^2 + C_ps always satisfies the squared equation; the decaying branch
  // (epsilon~ proportional to E - Mc^2 - C_ps) lies strictly above it.
  auto physical = [&](double E) { return E > ctx.Mc2() + ctx.C_sym + 1e-9; };
  EnergySolution sol = solve_kratzer(p, ctx, res, physical, "kratzer_pseudospin_energy");
  sol.aux = kratzer_aux(p, ctx, q, sol.energy, true);
  return sol;
}

double kratzer_nonrel_energy(const PotentialParams &p, const NonRelContext &ctx, int n, int l) {
  p.validate();
  ctx.validate();
  if (n < 0 || l < 0)
    throw domain_error("kratzer_nonrel_energy: n and l must be non-negative");
  const double h2 = ctx.hbar * ctx.hbar;
  const double s = std::sqrt((1.0 + 2.0 * l) * (1.0 + 2.0 * l) + 8.0 * ctx.mu * p.D * p.r_e * p.r_e / h2);
  const double t = p.D * p.r_e / (1.0 + 2.0 * n + s);
  return p.D - 8.0 * ctx.mu / h2 * t * t;
}

} // namespace gmorse
