#include "gmorse.h"

#include <cmath>
#include <cstring>
#include <span>
#include <string>

#include "errors.hpp"
#include "gmp_spectra.hpp"
#include "kratzer_spectra.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "potentials.hpp"
#include "wavefunctions.hpp"

namespace {

thread_local std::string g_last_error;

gmorse_status fail(gmorse_status s, const std::string &msg) {
  g_last_error = msg;
  return s;
}

template <typename Fn> gmorse_status guarded(Fn &&fn) {
  try {
    fn();
    g_last_error.clear();
    return GMORSE_OK;
  } catch (const gmorse::label_error &e) {
    return fail(GMORSE_ERR_BAD_LABEL, e.what());
  } catch (const gmorse::domain_error &e) {
    return fail(GMORSE_ERR_DOMAIN, e.what());
  } catch (const gmorse::no_bound_state_error &e) {
    return fail(GMORSE_ERR_NO_BOUND_STATE, e.what());
  } catch (const gmorse::ambiguous_root_error &e) {
    return fail(GMORSE_ERR_AMBIGUOUS_ROOT, e.what());
  } catch (const gmorse::unphysical_solution_error &e) {
    return fail(GMORSE_ERR_UNPHYSICAL, e.what());
  } catch (const gmorse::singularity_error &e) {
    return fail(GMORSE_ERR_SINGULAR, e.what());
  } catch (const gmorse::convergence_error &e) {
    return fail(GMORSE_ERR_NO_CONVERGENCE, e.what());
  } catch (const gmorse::degenerate_degree_error &e) {
    return fail(GMORSE_ERR_DEGENERATE_DEGREE, e.what());
  } catch (const std::exception &e) {
    return fail(GMORSE_ERR_INTERNAL, e.what());
  }
}

bool valid_symmetry(gmorse_symmetry s) {
  return s == GMORSE_SPIN || s == GMORSE_PSEUDOSPIN || s == GMORSE_NONREL;
}
bool valid_potential(gmorse_potential p) { return p == GMORSE_GMP || p == GMORSE_KRATZER; }

gmorse::Symmetry to_symmetry(gmorse_symmetry s) {
  switch (s) {
  case GMORSE_SPIN:
    return gmorse::Symmetry::spin;
  case GMORSE_PSEUDOSPIN:
    return gmorse::Symmetry::pseudospin;
  default:
    return gmorse::Symmetry::nonrelativistic;
  }
}

} // namespace

struct gmorse_model {
  gmorse::PotentialParams params{};
  gmorse::RelativisticContext rel{};
  gmorse::NonRelContext nonrel{};
  gmorse::ApproximationConfig approx{};
};

extern "C" {

gmorse_model *gmorse_model_new(void) {
  auto *m = new (std::nothrow) gmorse_model;
  return m;
}

void gmorse_model_free(gmorse_model *m) { delete m; }

gmorse_status gmorse_set_potential(gmorse_model *m, double D, double alpha, double r_e) {
  if (!m)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null model");
  return guarded([&] {
    gmorse::PotentialParams p{D, alpha, r_e};
    p.validate();
    m->params = p;
  });
}

gmorse_status gmorse_set_mass(gmorse_model *m, double M) {
  if (!m)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null model");
  if (!(M > 0))
    return fail(GMORSE_ERR_DOMAIN, "M must be positive");
  m->rel.M = M;
  return GMORSE_OK;
}

gmorse_status gmorse_set_symmetry_constant(gmorse_model *m, double c_sym) {
  if (!m)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null model");
  m->rel.C_sym = c_sym;
  return GMORSE_OK;
}

gmorse_status gmorse_set_reduced_mass(gmorse_model *m, double mu) {
  if (!m)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null model");
  if (!(mu > 0))
    return fail(GMORSE_ERR_DOMAIN, "mu must be positive");
  m->nonrel.mu = mu;
  return GMORSE_OK;
}

gmorse_status gmorse_set_d0(gmorse_model *m, double d0) {
  if (!m)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null model");
  if (!(d0 >= 0))
    return fail(GMORSE_ERR_DOMAIN, "d0 must be non-negative");
  m->approx.d0 = d0;
  return GMORSE_OK;
}

double gmorse_default_d0(void) { return gmorse::kImprovedD0; }

gmorse_status gmorse_solve(const gmorse_model *m, gmorse_potential pot, gmorse_symmetry sym, int n,
                           int kappa_or_l, gmorse_solution *out) {
  if (!m || !valid_potential(pot) || !valid_symmetry(sym))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null model or bad enum");
  return guarded([&] {
    gmorse_solution sol{};
    if (sym == GMORSE_NONREL) {
      if (kappa_or_l < 0)
        throw gmorse::domain_error("l must be non-negative");
      sol.energy = (pot == GMORSE_GMP)
                       ? gmorse::nonrel_energy(m->params, m->nonrel, n, kappa_or_l, m->approx)
                       : gmorse::kratzer_nonrel_energy(m->params, m->nonrel, n, kappa_or_l);
    } else {
      gmorse::QuantumNumbers q{n, kappa_or_l, to_symmetry(sym)};
      gmorse::EnergySolution es;
      if (pot == GMORSE_GMP)
        es = (sym == GMORSE_SPIN) ? gmorse::spin_energy(m->params, m->rel, q, m->approx)
                                  : gmorse::pseudospin_energy(m->params, m->rel, q, m->approx);
      else
        es = (sym == GMORSE_SPIN) ? gmorse::kratzer_spin_energy(m->params, m->rel, q)
                                  : gmorse::kratzer_pseudospin_energy(m->params, m->rel, q);
      sol.energy = es.energy;
      sol.residual = es.residual;
      sol.bracket_lo = es.bracket_lo;
      sol.bracket_hi = es.bracket_hi;
      if (const auto *a = std::get_if<gmorse::SpinAuxiliary>(&es.aux)) {
        sol.nu_sq = a->nu1_sq;
        sol.omega_sq = a->omega1_sq;
        sol.epsilon = a->epsilon;
        sol.delta = a->delta1;
      } else if (const auto *b = std::get_if<gmorse::PseudospinAuxiliary>(&es.aux)) {
        sol.nu_sq = b->nu2_sq;
        sol.omega_sq = b->omega2_sq;
        sol.epsilon = b->epsilon_tilde;
        sol.delta = b->delta2;
      } else if (const auto *c = std::get_if<gmorse::KratzerAuxiliary>(&es.aux)) {
        sol.epsilon = c->epsilon_k;
        sol.delta = c->K;
        sol.nu_sq = c->gamma;
        sol.omega_sq = c->q;
      }
    }
    if (out)
      *out = sol;
  });
}

gmorse_status gmorse_parse_state(const char *label, gmorse_symmetry sym, int *n, int *kappa_or_l) {
  if (!label || !n || !kappa_or_l || !valid_symmetry(sym))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null argument or bad enum");
  return guarded([&] {
    if (sym == GMORSE_NONREL) {
      const auto [nn, ll] = gmorse::nonrel_label_to_nl(label);
      *n = nn;
      *kappa_or_l = ll;
    } else {
      const auto q = gmorse::kappa_from_label(label, to_symmetry(sym));
      *n = q.n;
      *kappa_or_l = q.kappa;
    }
  });
}

gmorse_status gmorse_format_state(gmorse_symmetry sym, int n, int kappa_or_l, char *buf,
                                  size_t len) {
  if (!buf || len == 0 || !valid_symmetry(sym) || sym == GMORSE_NONREL)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "bad arguments (relativistic modes only)");
  return guarded([&] {
    gmorse::QuantumNumbers q{n, kappa_or_l, to_symmetry(sym)};
    q.validate();
    const std::string s = gmorse::label_from_state(q);
    if (s.size() + 1 > len)
      throw gmorse::domain_error("buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

namespace {

gmorse::WavefunctionFamily family_of(gmorse_potential pot, gmorse_symmetry sym) {
  if (sym == GMORSE_SPIN)
    return pot == GMORSE_GMP ? gmorse::WavefunctionFamily::gmp_spin
                             : gmorse::WavefunctionFamily::kratzer_spin;
  if (sym == GMORSE_PSEUDOSPIN)
    return pot == GMORSE_GMP ? gmorse::WavefunctionFamily::gmp_pseudospin
                             : gmorse::WavefunctionFamily::kratzer_pseudospin;
  return pot == GMORSE_GMP ? gmorse::WavefunctionFamily::nonrel_gmp
                           : gmorse::WavefunctionFamily::nonrel_kratzer;
}

} // namespace

gmorse_status gmorse_default_grid(const gmorse_model *m, gmorse_potential pot, gmorse_symmetry sym,
                                  int n, int kappa_or_l, double *r, size_t npts) {
  if (!m || !r || npts < 2 || !valid_potential(pot) || !valid_symmetry(sym))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    const auto family = family_of(pot, sym);
    std::vector<double> grid;
    if (sym == GMORSE_NONREL) {
      grid = gmorse::default_grid_nonrel(m->params, m->nonrel, n, kappa_or_l, family, m->approx,
                                         static_cast<int>(npts));
    } else {
      gmorse::QuantumNumbers q{n, kappa_or_l, to_symmetry(sym)};
      gmorse_solution sol{};
      const auto st = gmorse_solve(m, pot, sym, n, kappa_or_l, &sol);
      if (st != GMORSE_OK)
        throw gmorse::no_bound_state_error(g_last_error);
      grid = gmorse::default_grid(m->params, m->rel, q, sol.energy, family, m->approx,
                                  static_cast<int>(npts));
    }
    std::memcpy(r, grid.data(), grid.size() * sizeof(double));
  });
}

gmorse_status gmorse_wavefunction(const gmorse_model *m, gmorse_potential pot, gmorse_symmetry sym,
                                  int n, int kappa_or_l, const double *r, size_t npts,
                                  double *upper, double *lower, double *norm_check) {
  if (!m || !r || !upper || !lower || npts < 3 || !valid_potential(pot) || !valid_symmetry(sym))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    std::span<const double> grid(r, npts);
    gmorse::RadialWavefunction w;
    if (sym == GMORSE_NONREL) {
      w = (pot == GMORSE_GMP)
              ? gmorse::nonrel_wavefunction(m->params, m->nonrel, n, kappa_or_l, grid, m->approx)
              : gmorse::kratzer_nonrel_wavefunction(m->params, m->nonrel, n, kappa_or_l, grid);
    } else {
      gmorse::QuantumNumbers q{n, kappa_or_l, to_symmetry(sym)};
      gmorse_solution sol{};
      const auto st = gmorse_solve(m, pot, sym, n, kappa_or_l, &sol);
      if (st != GMORSE_OK)
        throw gmorse::no_bound_state_error(g_last_error);
      if (sym == GMORSE_SPIN)
        w = (pot == GMORSE_GMP)
                ? gmorse::gmp_spin_components(m->params, m->rel, q, sol.energy, grid, m->approx)
                : gmorse::kratzer_spin_components(m->params, m->rel, q, sol.energy, grid);
      else
        w = (pot == GMORSE_GMP)
                ? gmorse::gmp_pseudospin_components(m->params, m->rel, q, sol.energy, grid, m->approx)
                : gmorse::kratzer_pseudospin_components(m->params, m->rel, q, sol.energy, grid);
    }
    std::memcpy(upper, w.F.data(), npts * sizeof(double));
    std::memcpy(lower, w.G.data(), npts * sizeof(double));
    if (norm_check) {
      const bool lower_primary = (sym == GMORSE_PSEUDOSPIN);
      *norm_check = gmorse::norm_integral(w.r, lower_primary ? w.G : w.F);
    }
  });
}

gmorse_status gmorse_potential_eval(const gmorse_model *m, gmorse_potential pot, const double *r,
                                    size_t npts, double *v) {
  if (!m || !r || !v || !valid_potential(pot))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    const auto kind = pot == GMORSE_GMP ? gmorse::PotentialKind::gmp : gmorse::PotentialKind::kratzer;
    for (size_t i = 0; i < npts; ++i)
      v[i] = gmorse::potential_value(kind, r[i], m->params);
  });
}

gmorse_status gmorse_oracle_nonrel(const gmorse_model *m, gmorse_potential pot, int n, int l,
                                   double *energy) {
  if (!m || !energy || !valid_potential(pot))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    const auto kind = pot == GMORSE_GMP ? gmorse::PotentialKind::gmp : gmorse::PotentialKind::kratzer;
    *energy = gmorse::nonrel_oracle_energy(m->params, m->nonrel, n, l, kind);
  });
}

gmorse_status gmorse_oracle_dirac(const gmorse_model *m, gmorse_symmetry sym, int n, int kappa,
                                  double initial_guess, double *energy) {
  if (!m || !energy || sym == GMORSE_NONREL || !valid_symmetry(sym))
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "bad arguments");
  return guarded([&] {
    gmorse::QuantumNumbers q{n, kappa, to_symmetry(sym)};
    *energy = gmorse::dirac_effective_eigenvalue(m->params, m->rel, q, initial_guess);
  });
}

gmorse_status gmorse_solve_quartic(const double coeffs[5], double roots_re[4], double roots_im[4]) {
  if (!coeffs || !roots_re || !roots_im)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null arguments");
  return guarded([&] {
    gmorse::QuarticCoefficients qc{coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
    const auto roots = gmorse::solve_quartic(qc);
    for (int i = 0; i < 4; ++i) {
      roots_re[i] = roots[static_cast<std::size_t>(i)].real();
      roots_im[i] = roots[static_cast<std::size_t>(i)].imag();
    }
  });
}

gmorse_status gmorse_solve_cubic(const double coeffs[4], double roots_re[3], double roots_im[3]) {
  if (!coeffs || !roots_re || !roots_im)
    return fail(GMORSE_ERR_INVALID_ARGUMENT, "null arguments");
  return guarded([&] {
    const auto roots = gmorse::solve_cubic(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
    for (int i = 0; i < 3; ++i) {
      roots_re[i] = roots[static_cast<std::size_t>(i)].real();
      roots_im[i] = roots[static_cast<std::size_t>(i)].imag();
    }
  });
}

const char *gmorse_status_name(gmorse_status s) {
  switch (s) {
  case GMORSE_OK:
    return "ok";
  case GMORSE_ERR_INVALID_ARGUMENT:
    return "invalid-argument";
  case GMORSE_ERR_DOMAIN:
    return "domain-error";
  case GMORSE_ERR_BAD_LABEL:
    return "bad-label";
  case GMORSE_ERR_NO_BOUND_STATE:
    return "no-bound-state";
  case GMORSE_ERR_AMBIGUOUS_ROOT:
    return "ambiguous-root";
  case GMORSE_ERR_UNPHYSICAL:
    return "unphysical-solution";
  case GMORSE_ERR_SINGULAR:
    return "singular-denominator";
  case GMORSE_ERR_NO_CONVERGENCE:
    return "no-convergence";
  case GMORSE_ERR_DEGENERATE_DEGREE:
    return "degenerate-degree";
  default:
    return "internal-error";
  }
}

const char *gmorse_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
