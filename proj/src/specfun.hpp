#pragma once

namespace gmorse {

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1); 1 for n = 0.
double pochhammer(double a, int n);

/// Terminating Gauss series 2F1(-n, b; c; z), evaluated by stable forward
/// accumulation of the n+1 terms. c must not hit a non-positive integer pole
/// inside the sum.
double gauss_2f1_terminating(int n, double b, double c, double z);

/// Jacobi polynomial P_n^{(a,b)}(x), a > -1, b > -1, by three-term recurrence.
double jacobi_poly(int n, double a, double b, double x);

/// Jacobi polynomial through 2F1(-n, n+a+b+1; a+1; (1-x)/2). Cross-check
/// route for jacobi_poly; not the production path.
double jacobi_poly_2f1(int n, double a, double b, double x);

/// Associated Laguerre polynomial L_n^{(beta)}(x), beta > -1, x >= 0.
double laguerre_poly(int n, double beta, double x);

} // namespace gmorse
