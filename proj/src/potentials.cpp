#include "potentials.hpp"

#include <cmath>

#include "errors.hpp"

namespace gmorse {

double gmp(double r, const PotentialParams &p) {
  if (!(r > 0))
    throw domain_error("gmp: r must be positive");
  if (!(p.alpha > 0))
    throw domain_error("gmp: alpha must be positive (use kratzer for alpha = 0)");
  const double t = 1.0 - p.b() / std::expm1(p.alpha * r);
  return p.D * t * t;
}

double kratzer(double r, const PotentialParams &p) {
  if (!(r > 0))
    throw domain_error("kratzer: r must be positive");
  const double t = (r - p.r_e) / r;
  return p.D * t * t;
}

double centrifugal_approx(double r, double alpha, const ApproximationConfig &cfg) {
  if (!(r > 0))
    throw domain_error("centrifugal_approx: r must be positive");
  if (!(alpha > 0))
    throw domain_error("centrifugal_approx: alpha must be positive");
  // e^{-x}/(1-e^{-x})^2 via expm1 to avoid cancellation at small x
  const double x = alpha * r;
  const double em = std::expm1(-x);
  const double core = std::exp(-x) / (em * em);
  return alpha * alpha * (cfg.d0 + core);
}

double potential_value(PotentialKind kind, double r, const PotentialParams &p) {
  return kind == PotentialKind::gmp ? gmp(r, p) : kratzer(r, p);
}

std::vector<std::pair<double, double>> sample_curve(PotentialKind kind, const PotentialParams &p,
                                                    std::span<const double> grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double r : grid)
    out.emplace_back(r, potential_value(kind, r, p));
  return out;
}

} // namespace gmorse
