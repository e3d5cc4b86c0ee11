#include "specfun.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace gmorse {

double ln_gamma(double x) {
  if (!(x > 0))
    throw domain_error("ln_gamma: x must be positive, got " + std::to_string(x));
  return std::lgamma(x);
}

double pochhammer(double a, int n) {
  if (n < 0)
    throw domain_error("pochhammer: n must be non-negative");
  double prod = 1.0;
  for (int k = 0; k < n; ++k)
    prod *= a + k;
  return prod;
}

double gauss_2f1_terminating(int n, double b, double c, double z) {
  if (n < 0)
    throw domain_error("gauss_2f1_terminating: n must be non-negative");
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < n; ++k) {
    const double denom = (c + k) * (k + 1);
    if (denom == 0.0)
      throw domain_error("gauss_2f1_terminating: c hits a pole inside the sum");
    term *= (static_cast<double>(-n + k) * (b + k) / denom) * z;
    sum += term;
  }
  return sum;
}

double jacobi_poly(int n, double a, double b, double x) {
  if (n < 0)
    throw domain_error("jacobi_poly: n must be non-negative");
  if (!(a > -1.0) || !(b > -1.0))
    throw domain_error("jacobi_poly: parameters must exceed -1");
  if (n == 0)
    return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double a2 = (s - 1.0) * (a * a - b * b);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = ((a2 + a3 * x) * p - a4 * pm1) / a1;
    pm1 = p;
    p = next;
  }
  return p;
}

#if defined(__SIZEOF_FLOAT128__)
using wide_float = __float128;
#else
using wide_float = long double;
#endif

double jacobi_poly_2f1(int n, double a, double b, double x) {
  if (!(a > -1.0) || !(b > -1.0))
    throw domain_error("jacobi_poly_2f1: parameters must exceed -1");
  // The terminating series cancels catastrophically (condition ~10^12 at
  // n = 20): reflect x < 0 onto P_n^{(b,a)}(-x) to keep the argument at or
  // below 1/2 and accumulate in the widest float available.
  if (x < 0.0)
    return (n % 2 ? -1.0 : 1.0) * jacobi_poly_2f1(n, b, a, -x);
  const wide_float z = wide_float(0.5) * (wide_float(1) - wide_float(x));
  const wide_float bb = wide_float(n) + wide_float(a) + wide_float(b) + wide_float(1);
  const wide_float cc = wide_float(a) + wide_float(1);
  wide_float sum = 1, term = 1;
  for (int k = 0; k < n; ++k) {
    term *= wide_float(-n + k) * (bb + wide_float(k)) /
            ((cc + wide_float(k)) * wide_float(k + 1)) * z;
    sum += term;
  }
  wide_float pre = 1;
  for (int k = 0; k < n; ++k)
    pre *= (cc + wide_float(k)) / wide_float(k + 1);
  return static_cast<double>(pre * sum);
}

double laguerre_poly(int n, double beta, double x) {
  if (n < 0)
    throw domain_error("laguerre_poly: n must be non-negative");
  if (!(beta > -1.0))
    throw domain_error("laguerre_poly: beta must exceed -1");
  if (!(x >= 0.0))
    throw domain_error("laguerre_poly: x must be non-negative");
  if (n == 0)
    return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + beta - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + beta - x) * l - (k + beta) * lm1) / (k + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

} // namespace gmorse
