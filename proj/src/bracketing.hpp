#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace gmorse {

/// A residual function on an energy window. Returns nullopt where the
/// residual is undefined (e.g. a square root argument goes negative); such
/// points never participate in sign-change detection.
using MaskedResidual = std::function<std::optional<double>(double)>;

struct ScanOptions {
  int steps = 2000;
  double xtol = 1e-12;
};

struct Bracket {
  double lo = 0, hi = 0;
};

/// Uniform scan of [lo, hi]; collects brackets between consecutive valid
/// points where the residual changes sign.
std::vector<Bracket> scan_sign_changes(const MaskedResidual &f, double lo, double hi,
                                       const ScanOptions &opts = {});

/// Bisection on a bracket known to contain a sign change; refines to xtol.
double bisect(const MaskedResidual &f, Bracket br, double xtol = 1e-12);

} // namespace gmorse
