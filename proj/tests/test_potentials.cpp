#include <cmath>
#include <vector>

#include "doctest.h"

#include "errors.hpp"
#include "potentials.hpp"

using namespace gmorse;

TEST_CASE("gmp shape") {
  PotentialParams p{15.0, 0.05, 0.4};
  CHECK(gmp(p.r_e, p) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(gmp(1e4, p) == doctest::Approx(p.D).epsilon(1e-10));
  CHECK(gmp(1e-9, p) > 1e10); // divergent toward the origin
  CHECK_THROWS_AS(gmp(0.0, p), domain_error);
  CHECK_THROWS_AS(gmp(-1.0, p), domain_error);

  // unique zero minimum at r_e for the Fig.-1 parameter sets
  for (double alpha : {0.05, 0.15, 0.30, 0.40})
    for (double re : {0.4, 0.8, 1.2}) {
      PotentialParams q{15.0, alpha, re};
      double best_r = 0, best_v = 1e300;
      for (int i = 1; i <= 4000; ++i) {
        const double r = i * 1e-3;
        const double v = gmp(r, q);
        if (v < best_v) {
          best_v = v;
          best_r = r;
        }
      }
      CHECK(best_r == doctest::Approx(re).epsilon(2e-3));
      CHECK(best_v <= 1e-6);
    }
}

TEST_CASE("kratzer shape and alpha->0 limit") {
  PotentialParams p{15.0, 0.0, 0.4};
  CHECK(kratzer(p.r_e, p) == doctest::Approx(0.0));
  CHECK(kratzer(1e7, p) == doctest::Approx(p.D).epsilon(1e-6));
  CHECK_THROWS_AS(kratzer(0.0, p), domain_error);

  // sup-norm of gmp - kratzer over [0.1, 10] shrinks as alpha drops
  double prev = 1e300;
  for (double alpha : {1e-2, 1e-3, 1e-4}) {
    PotentialParams q{15.0, alpha, 0.4};
    double sup = 0;
    for (int i = 1; i <= 1000; ++i) {
      const double r = 0.1 + (10.0 - 0.1) * i / 1000.0;
      sup = std::max(sup, std::abs(gmp(r, q) - kratzer(r, q)));
    }
    CHECK(sup < prev);
    prev = sup;
  }
  // and the relative gap is already small at alpha = 1e-6
  PotentialParams q{15.0, 1e-6, 0.4};
  for (double r : {0.1, 0.5, 2.0, 10.0})
    CHECK(gmp(r, q) == doctest::Approx(kratzer(r, q)).epsilon(1e-4));
}

TEST_CASE("centrifugal approximation against its series") {
  const ApproximationConfig series_cfg{kSeriesD0};
  const double alpha = 1.0, r = 0.1; // alpha r = 0.1
  const double x = alpha * r;
  const double series =
      alpha * alpha *
      (kSeriesD0 + 1.0 / (x * x) - 1.0 / 12.0 + x * x / 240.0 - std::pow(x, 4) / 6048.0 +
       std::pow(x, 6) / 172800.0);
  CHECK(centrifugal_approx(r, alpha, series_cfg) == doctest::Approx(series).epsilon(1e-10));

  // alpha -> 0 recovers 1/r^2
  CHECK(centrifugal_approx(1.0, 1e-4, series_cfg) == doctest::Approx(1.0).epsilon(1e-6));

  // near the minimum of the Table-5 parameter set
  CHECK(std::abs(centrifugal_approx(0.4, 0.1) - 1.0 / 0.16) / (1.0 / 0.16) < 1e-5);

  // error envelope and fixed sign in the series-dominated region (d0 = 1/12)
  for (double xr : {0.02, 0.05, 0.1, 0.2, 0.3}) {
    const double rr = xr / alpha;
    const double diff = centrifugal_approx(rr, alpha, series_cfg) - 1.0 / (rr * rr);
    CHECK(diff > 0.0);
    CHECK(std::abs(diff) <= alpha * alpha * (xr * xr / 240.0) * 1.05);
  }
  CHECK_THROWS_AS(centrifugal_approx(-0.1, 1.0), domain_error);
}

TEST_CASE("sample_curve") {
  PotentialParams p{15.0, 0.05, 0.4};
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i)
    grid.push_back(0.05 * i);
  const auto curve = sample_curve(PotentialKind::gmp, p, grid);
  REQUIRE(curve.size() == grid.size());
  double vmin = 1e300, rmin = 0;
  for (const auto &[r, v] : curve)
    if (v < vmin) {
      vmin = v;
      rmin = r;
    }
  CHECK(rmin == doctest::Approx(0.4));
  CHECK(sample_curve(PotentialKind::kratzer, p, {}).empty());
}
