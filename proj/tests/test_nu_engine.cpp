#include <cmath>

#include "doctest.h"

#include "errors.hpp"
#include "gmp_spectra.hpp"
#include "nu_engine.hpp"
#include "wavefunctions.hpp"

using namespace gmorse;

namespace {

/// Template of the spin-symmetric GMP equation at energy E (coefficients of
/// the transformed z-equation).
NUTemplate spin_template(const PotentialParams &p, const RelativisticContext &ctx,
                         const QuantumNumbers &q, double E, double d0) {
  const double b = p.b();
  const double a2hc2 = p.alpha * p.alpha * ctx.hc2();
  const double nu1_sq = (ctx.Mc2() + E - ctx.C_sym) * p.D / a2hc2;
  const double om1_sq = (E * E - ctx.Mc2() * ctx.Mc2() + ctx.C_sym * (ctx.Mc2() - E)) / a2hc2;
  const double eps_sq = nu1_sq - om1_sq + q.kappa * (q.kappa + 1) * d0;
  NUTemplate t;
  t.c1 = t.c2 = t.c3 = 1.0;
  t.A = (2.0 + b) * b * nu1_sq + eps_sq;
  t.B = 2.0 * (b * nu1_sq + eps_sq) - q.kappa * (q.kappa + 1);
  t.C = eps_sq;
  return t;
}

} // namespace

TEST_CASE("derived constants for the GMP template") {
  PotentialParams p{15.0, 0.1, 0.4};
  RelativisticContext ctx{1.0, 0.0};
  QuantumNumbers q{0, -2, Symmetry::spin};
  const ApproximationConfig cfg;
  const double E = 5.0; // off-shell is fine for structural checks
  const auto t = spin_template(p, ctx, q, E, cfg.d0);
  const auto k = derive_constants(t);

  CHECK(k.c4 == 0.0);
  CHECK(k.c5 == -0.5);
  CHECK(k.c6 == doctest::Approx(0.25 + t.A).epsilon(1e-15));
  CHECK(k.c8 == doctest::Approx(t.C).epsilon(1e-15));

  // c9 must carry no d0 dependence: ((1+2k)^2)/4 + b^2 nu1^2
  const double b = p.b();
  const double nu1_sq = (ctx.Mc2() + E) * p.D / (p.alpha * p.alpha);
  CHECK(k.c9 == doctest::Approx(0.25 * (1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) +
                                b * b * nu1_sq)
                    .epsilon(1e-12));

  // main-text polynomial coefficients: pi, k-root, tau
  const double S = std::sqrt((1.0 + 2.0 * q.kappa) * (1.0 + 2.0 * q.kappa) + 4.0 * b * b * nu1_sq);
  const double eps = std::sqrt(t.C);
  CHECK(k.pi.intercept == doctest::Approx(eps).epsilon(1e-12));
  CHECK(k.pi.slope == doctest::Approx(-0.5 - (0.5 * S + eps)).epsilon(1e-12));
  CHECK(k.k == doctest::Approx(2.0 * b * nu1_sq - q.kappa * (q.kappa + 1) - eps * S).epsilon(1e-9));
  CHECK(k.tau.intercept == doctest::Approx(1.0 + 2.0 * eps).epsilon(1e-12));
  CHECK(k.tau.slope == doctest::Approx(-2.0 * (1.0 + eps + 0.5 * S)).epsilon(1e-12));
  CHECK(k.tau.slope < 0);
}

TEST_CASE("eigenvalue residual vanishes exactly on shell") {
  PotentialParams p{15.0, 0.1, 0.4};
  RelativisticContext ctx{1.0, 0.0};
  const ApproximationConfig cfg;
  for (int kappa : {-2, -4, 1}) {
    for (int n : {0, 1}) {
      QuantumNumbers q{n, kappa, Symmetry::spin};
      const auto sol = spin_energy(p, ctx, q, cfg);
      const auto on_shell = spin_template(p, ctx, q, sol.energy, cfg.d0);
      CHECK(std::abs(eigenvalue_residual(on_shell, n)) < 1e-9);
      const auto off_shell = spin_template(p, ctx, q, sol.energy + 0.1, cfg.d0);
      CHECK(std::abs(eigenvalue_residual(off_shell, n)) > 1e-4);
    }
  }
}

TEST_CASE("constraint violations raise typed errors") {
  // c8 = c4^2 + C = 0 for this template -> c12 = 0 -> unphysical
  NUTemplate t{1.0, 1.0, 1.0, 2.0, 1.0, 0.0};
  CHECK_THROWS_AS(derive_constants(t), unphysical_solution_error);

  // C < 0 makes c8 < 0 -> no bound state
  NUTemplate t2{1.0, 1.0, 1.0, 2.0, 1.0, -0.5};
  CHECK_THROWS_AS(derive_constants(t2), no_bound_state_error);

  NUTemplate t3{1.0, 1.0, 0.0, 2.0, 1.0, 0.5};
  CHECK_THROWS_AS(derive_constants(t3), domain_error);
}

TEST_CASE("wavefunction factors") {
  PotentialParams p{15.0, 0.1, 0.4};
  RelativisticContext ctx{1.0, 0.0};
  QuantumNumbers q{0, -2, Symmetry::spin};
  const ApproximationConfig cfg;
  const auto sol = spin_energy(p, ctx, q, cfg);
  const auto t = spin_template(p, ctx, q, sol.energy, cfg.d0);
  const auto f = wavefunction_factors(t, 0);

  CHECK(f.y_n(0.3) == 1.0); // P_0 = 1
  CHECK(f.phi(0.0) == 0.0); // z^{c12} with c12 > 0

  const auto k = derive_constants(t);
  const double z = 0.2;
  CHECK(f.phi(z) == doctest::Approx(std::pow(z, k.c12) * std::pow(1.0 - z, k.c13)).epsilon(1e-14));
  CHECK(f.rho(z) == doctest::Approx(std::pow(z, k.c10) * std::pow(1.0 - z, k.c11)).epsilon(1e-14));
}

TEST_CASE("phi * y_n composes into the sampled upper component") {
  PotentialParams p{15.0, 0.1, 0.4};
  RelativisticContext ctx{1.0, 0.0};
  const ApproximationConfig cfg;
  for (int n : {0, 1, 2}) {
    QuantumNumbers q{n, -2, Symmetry::spin};
    const auto sol = spin_energy(p, ctx, q, cfg);
    const auto t = spin_template(p, ctx, q, sol.energy, cfg.d0);
    const auto f = wavefunction_factors(t, n);

    const auto grid = default_grid(p, ctx, q, sol.energy, WavefunctionFamily::gmp_spin);
    const auto w = gmp_spin_components(p, ctx, q, sol.energy, grid);

    // F(r) = N * phi(z) * y_n(z): the ratio must be the constant N
    double ratio = 0;
    bool first = true;
    for (std::size_t i = 400; i < grid.size(); i += 500) {
      const double z = std::exp(-p.alpha * grid[i]);
      const double shape = f.phi(z) * f.y_n(z);
      if (std::abs(shape) < 1e-12 || std::abs(w.F[i]) < 1e-12)
        continue;
      const double r = w.F[i] / shape;
      if (first) {
        ratio = r;
        first = false;
      } else {
        CHECK(r == doctest::Approx(ratio).epsilon(1e-8));
      }
    }
    CHECK(ratio == doctest::Approx(w.norm_constant).epsilon(1e-6));
  }
}

TEST_CASE("orthogonality across n is measured, not asserted") {
  // The approximate scheme does not guarantee <F_m|F_n> = 0; record the
  // overlap magnitude for reference.
  PotentialParams p{15.0, 0.1, 0.4};
  RelativisticContext ctx{1.0, 0.0};
  QuantumNumbers q0{0, -2, Symmetry::spin};
  QuantumNumbers q1{1, -2, Symmetry::spin};
  const auto s0 = spin_energy(p, ctx, q0);
  const auto s1 = spin_energy(p, ctx, q1);
  const auto grid = default_grid(p, ctx, q1, s1.energy, WavefunctionFamily::gmp_spin);
  const auto w0 = gmp_spin_components(p, ctx, q0, s0.energy, grid);
  const auto w1 = gmp_spin_components(p, ctx, q1, s1.energy, grid);
  double overlap = 0;
  for (std::size_t i = 0; i + 2 < grid.size(); i += 2) {
    const double h0 = grid[i + 1] - grid[i], h1 = grid[i + 2] - grid[i + 1];
    const double s = h0 + h1;
    overlap += s / 6.0 *
               ((2.0 - h1 / h0) * w0.F[i] * w1.F[i] +
                s * s / (h0 * h1) * w0.F[i + 1] * w1.F[i + 1] +
                (2.0 - h0 / h1) * w0.F[i + 2] * w1.F[i + 2]);
  }
  MESSAGE("spin <F_0|F_1> overlap = ", overlap);
  CHECK(std::isfinite(overlap));
}
