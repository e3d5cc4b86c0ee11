#include <cmath>

#include "doctest.h"

#include "golden.hpp"
#include "model.hpp"

using namespace gmorse;

TEST_CASE("potential params derive b and validate") {
  PotentialParams p{15.0, 0.1, 0.4};
  CHECK(p.b() == doctest::Approx(std::expm1(0.04)).epsilon(1e-15));
  CHECK_NOTHROW(p.validate());
  CHECK(PotentialParams{15.0, 0.0, 0.4}.b() == 0.0);
  CHECK_THROWS_AS((PotentialParams{-1.0, 0.1, 0.4}.validate()), domain_error);
  CHECK_THROWS_AS((PotentialParams{15.0, 0.1, 0.0}.validate()), domain_error);
}

TEST_CASE("kappa to l and l~ mappings") {
  for (int kappa = -8; kappa <= 8; ++kappa) {
    if (kappa == 0)
      continue;
    QuantumNumbers q{0, kappa, Symmetry::spin};
    CHECK(q.kappa * (q.kappa + 1) == q.l() * (q.l() + 1));
    CHECK(q.kappa * (q.kappa - 1) == q.l_tilde() * (q.l_tilde() + 1));

    // kappa and -(kappa+1) share l; kappa and 1-kappa share l~
    if (kappa != -1) {
      QuantumNumbers partner{0, -kappa - 1, Symmetry::spin};
      CHECK(partner.l() == q.l());
    }
    QuantumNumbers pseudo_partner{0, 1 - kappa, Symmetry::pseudospin};
    CHECK(pseudo_partner.l_tilde() == q.l_tilde());
  }
  CHECK_THROWS_AS((QuantumNumbers{0, 0, Symmetry::spin}.validate()), domain_error);
  CHECK_THROWS_AS((QuantumNumbers{-1, 1, Symmetry::spin}.validate()), domain_error);
}

TEST_CASE("relativistic label parsing") {
  auto q = kappa_from_label("0p_{3/2}", Symmetry::spin);
  CHECK(q.n == 0);
  CHECK(q.kappa == -2);

  q = kappa_from_label("0p_{1/2}", Symmetry::spin);
  CHECK(q.n == 0);
  CHECK(q.kappa == 1);

  q = kappa_from_label("1s_{1/2}", Symmetry::pseudospin);
  CHECK(q.n == 1);
  CHECK(q.kappa == -1);

  q = kappa_from_label("0d3/2", Symmetry::pseudospin); // brace-free form
  CHECK(q.n == 0);
  CHECK(q.kappa == 2);

  CHECK_THROWS_AS(kappa_from_label("2s_{5/2}", Symmetry::spin), label_error); // |2j-2l| != 1
  CHECK_THROWS_AS(kappa_from_label("2p", Symmetry::spin), label_error);       // j missing
  CHECK_THROWS_AS(kappa_from_label("x2", Symmetry::spin), label_error);
  CHECK_THROWS_AS(kappa_from_label("1s_{2/2}", Symmetry::spin), label_error); // 2j even
}

TEST_CASE("nonrel label to (n, l)") {
  CHECK(nonrel_label_to_nl("2p") == std::pair<int, int>{0, 1});
  CHECK(nonrel_label_to_nl("3d") == std::pair<int, int>{0, 2});
  CHECK(nonrel_label_to_nl("1s") == std::pair<int, int>{0, 0});
  CHECK(nonrel_label_to_nl("6g") == std::pair<int, int>{1, 4});
  CHECK_THROWS_AS(nonrel_label_to_nl("1p"), label_error); // N <= l
}

TEST_CASE("label round-trip over the table states") {
  for (const auto &row : golden::table5()) {
    QuantumNumbers q{row.n, row.kappa, Symmetry::spin};
    const auto back = kappa_from_label(label_from_state(q), Symmetry::spin);
    CHECK(back.n == row.n);
    CHECK(back.kappa == row.kappa);

    QuantumNumbers partner{row.n, -row.kappa - 1, Symmetry::spin};
    const auto pback = kappa_from_label(label_from_state(partner), Symmetry::spin);
    CHECK(pback.kappa == partner.kappa);
  }
  for (const auto &row : golden::table6()) {
    QuantumNumbers q{row.n, row.kappa, Symmetry::pseudospin};
    const auto back = kappa_from_label(label_from_state(q), Symmetry::pseudospin);
    CHECK(back.n == row.n);
    CHECK(back.kappa == row.kappa);
  }
}
