#include "bracketing.hpp"

#include <cmath>

#include "errors.hpp"

namespace gmorse {

std::vector<Bracket> scan_sign_changes(const MaskedResidual &f, double lo, double hi,
                                       const ScanOptions &opts) {
  std::vector<Bracket> out;
  const double step = (hi - lo) / opts.steps;
  bool have_prev = false;
  double prev_x = 0, prev_f = 0;
  for (int i = 0; i <= opts.steps; ++i) {
    const double x = lo + i * step;
    const auto fx = f(x);
    if (!fx || !std::isfinite(*fx)) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev_f * *fx < 0)
      out.push_back({prev_x, x});
    have_prev = true;
    prev_x = x;
    prev_f = *fx;
  }
  return out;
}

double bisect(const MaskedResidual &f, Bracket br, double xtol) {
  auto flo = f(br.lo);
  auto fhi = f(br.hi);
  if (!flo || !fhi || *flo * *fhi > 0)
    throw convergence_error("bisect: bracket does not straddle a sign change");
  double lo = br.lo, hi = br.hi;
  double vlo = *flo;
  for (int it = 0; it < 200 && hi - lo > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto fm = f(mid);
    if (!fm)
      throw convergence_error("bisect: residual became undefined inside the bracket");
    if (*fm == 0.0)
      return mid;
    if (vlo * *fm < 0) {
      hi = mid;
    } else {
      lo = mid;
      vlo = *fm;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace gmorse
