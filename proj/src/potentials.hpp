#pragma once

#include <span>
#include <utility>
#include <vector>

#include "model.hpp"

namespace gmorse {

/// d0 from the small-(alpha r) series of the centrifugal approximation.
inline constexpr double kSeriesD0 = 1.0 / 12.0;

/// Tuned value of d0 used throughout the literature on this approximation
/// scheme; the reference spectra in data/ were generated with it. The series
/// value 1/12 applies only in the strict alpha*r -> 0 limit.
inline constexpr double kImprovedD0 = 0.0823058167837972;

/// Configuration of the centrifugal (pseudo-centrifugal) approximation.
struct ApproximationConfig {
  double d0 = kImprovedD0;
};

enum class PotentialKind { gmp, kratzer };

/// Generalized Morse potential D (1 - b/(e^{alpha r} - 1))^2, r > 0.
double gmp(double r, const PotentialParams &p);

/// Kratzer potential D ((r - r_e)/r)^2, the alpha -> 0 limit of gmp.
double kratzer(double r, const PotentialParams &p);

/// Improved approximation alpha^2 [d0 + e^{-alpha r}/(1 - e^{-alpha r})^2]
/// to the centrifugal term 1/r^2, exact as alpha -> 0.
double centrifugal_approx(double r, double alpha, const ApproximationConfig &cfg = {});

double potential_value(PotentialKind kind, double r, const PotentialParams &p);

/// Pointwise samples (r, V(r)) for curve emission.
std::vector<std::pair<double, double>> sample_curve(PotentialKind kind, const PotentialParams &p,
                                                    std::span<const double> grid);

} // namespace gmorse
