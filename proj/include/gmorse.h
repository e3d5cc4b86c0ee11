/*
 * gmorse: bound-state solver for the generalized Morse potential and its
 * Kratzer limit: Dirac spectra under spin/pseudospin symmetry, the
 * non-relativistic closed forms, normalized radial wavefunctions, and an
 * independent finite-difference eigensolver for validation.
 *
 * Plain-C surface over the C++ core: opaque model handle, status codes, and
 * caller-owned buffers. All functions are thread-safe as long as a given
 * gmorse_model is not mutated concurrently with use.
 */
#ifndef GMORSE_H
#define GMORSE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GMORSE_API __declspec(dllexport)
#else
#define GMORSE_API __attribute__((visibility("default")))
#endif

typedef enum gmorse_status {
  GMORSE_OK = 0,
  GMORSE_ERR_INVALID_ARGUMENT = 1,  /* null pointers, bad enum values, ... */
  GMORSE_ERR_DOMAIN = 2,            /* parameter outside mathematical domain */
  GMORSE_ERR_BAD_LABEL = 3,         /* unparsable or inconsistent state label */
  GMORSE_ERR_NO_BOUND_STATE = 4,    /* no decaying root in the energy window */
  GMORSE_ERR_AMBIGUOUS_ROOT = 5,    /* several physical roots; none selected */
  GMORSE_ERR_UNPHYSICAL = 6,        /* normalizability constraints violated */
  GMORSE_ERR_SINGULAR = 7,          /* vanishing component denominator */
  GMORSE_ERR_NO_CONVERGENCE = 8,    /* iteration limit reached */
  GMORSE_ERR_DEGENERATE_DEGREE = 9, /* zero leading polynomial coefficient */
  GMORSE_ERR_INTERNAL = 10
} gmorse_status;

typedef enum gmorse_symmetry {
  GMORSE_SPIN = 0,
  GMORSE_PSEUDOSPIN = 1,
  GMORSE_NONREL = 2
} gmorse_symmetry;

typedef enum gmorse_potential {
  GMORSE_GMP = 0,
  GMORSE_KRATZER = 1
} gmorse_potential;

/* Opaque bundle of potential parameters, masses, symmetry constant and the
 * centrifugal-approximation constant d0. */
typedef struct gmorse_model gmorse_model;

GMORSE_API gmorse_model *gmorse_model_new(void);
GMORSE_API void gmorse_model_free(gmorse_model *m);

/* Defaults: hbar = c = 1, d0 = 0.0823058167837972, C_sym = 0. */
GMORSE_API gmorse_status gmorse_set_potential(gmorse_model *m, double D, double alpha, double r_e);
GMORSE_API gmorse_status gmorse_set_mass(gmorse_model *m, double M);
GMORSE_API gmorse_status gmorse_set_symmetry_constant(gmorse_model *m, double c_sym);
GMORSE_API gmorse_status gmorse_set_reduced_mass(gmorse_model *m, double mu);
GMORSE_API gmorse_status gmorse_set_d0(gmorse_model *m, double d0);
GMORSE_API double gmorse_default_d0(void);

typedef struct gmorse_solution {
  double energy;
  double residual;               /* value of the energy equation at the root */
  double bracket_lo, bracket_hi; /* scan bracket the root was refined from   */
  double nu_sq;                  /* family auxiliaries (zero where unused):  */
  double omega_sq;               /*   nu^2, omega^2, decay exponent, delta   */
  double epsilon;
  double delta;
} gmorse_solution;

/* Bound-state energy.
 *   symmetry = GMORSE_SPIN / GMORSE_PSEUDOSPIN: kappa_or_l is kappa (!= 0).
 *   symmetry = GMORSE_NONREL: kappa_or_l is the orbital l >= 0 and the
 *   closed-form level is returned (residual 0).
 * `out` may be NULL if only the status is of interest. */
GMORSE_API gmorse_status gmorse_solve(const gmorse_model *m, gmorse_potential pot,
                                      gmorse_symmetry sym, int n, int kappa_or_l,
                                      gmorse_solution *out);

/* "0p_{3/2}"/"0p3/2" -> (n, kappa) in relativistic modes; "2p" -> (n, l) in
 * the non-relativistic mode. */
GMORSE_API gmorse_status gmorse_parse_state(const char *label, gmorse_symmetry sym, int *n,
                                            int *kappa_or_l);
/* Inverse for relativistic modes: (n, kappa) -> "np_{3/2}"-style label. */
GMORSE_API gmorse_status gmorse_format_state(gmorse_symmetry sym, int n, int kappa_or_l, char *buf,
                                             size_t len);

/* Fills `r` with the recommended geometric sampling grid for the state. */
GMORSE_API gmorse_status gmorse_default_grid(const gmorse_model *m, gmorse_potential pot,
                                             gmorse_symmetry sym, int n, int kappa_or_l, double *r,
                                             size_t npts);

/* Normalized radial components on a caller-supplied increasing grid. Spin
 * families normalize `upper` (F), pseudospin families `lower` (G); the
 * non-relativistic mode fills `upper` and zeroes `lower`. `norm_check` (may
 * be NULL) receives the quadrature of the normalized component (~1). */
GMORSE_API gmorse_status gmorse_wavefunction(const gmorse_model *m, gmorse_potential pot,
                                             gmorse_symmetry sym, int n, int kappa_or_l,
                                             const double *r, size_t npts, double *upper,
                                             double *lower, double *norm_check);

GMORSE_API gmorse_status gmorse_potential_eval(const gmorse_model *m, gmorse_potential pot,
                                               const double *r, size_t npts, double *v);

/* Finite-difference eigensolver with the exact centrifugal term. */
GMORSE_API gmorse_status gmorse_oracle_nonrel(const gmorse_model *m, gmorse_potential pot, int n,
                                              int l, double *energy);
/* Self-consistent Dirac-reduced oracle (GMP potential). */
GMORSE_API gmorse_status gmorse_oracle_dirac(const gmorse_model *m, gmorse_symmetry sym, int n,
                                             int kappa, double initial_guess, double *energy);

/* Closed-form solvers for a4 x^4 + ... + a0 and a3 x^3 + ... + a0
 * (coefficients ordered highest degree first). */
GMORSE_API gmorse_status gmorse_solve_quartic(const double coeffs[5], double roots_re[4],
                                              double roots_im[4]);
GMORSE_API gmorse_status gmorse_solve_cubic(const double coeffs[4], double roots_re[3],
                                            double roots_im[3]);

GMORSE_API const char *gmorse_status_name(gmorse_status s);
/* Detail message of the most recent failure on this thread ("" if none). */
GMORSE_API const char *gmorse_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* GMORSE_H */
