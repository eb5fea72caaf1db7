#include <cmath>
#include <numbers>

#include <doctest.h>

#include "fixtures.hpp"
#include "nicholson/analysis.hpp"
#include "nicholson/errors.hpp"

using namespace nicholson;
using nicholson::testing::eq16;
using nicholson::testing::eq16_config;
using doctest::Approx;

namespace {
const double kTwoPi = 2.0 * std::numbers::pi;
const double kE = std::numbers::e;
}  // namespace

TEST_CASE("hypotheses on the example system") {
  SUBCASE("alpha = 2, beta = 2 passes everything") {
    const HypothesisReport rep = check_hypotheses(eq16(2.0, 2.0));
    CHECK(rep.h1.lhs == Approx(3.0 / kE + 2.25).epsilon(1e-12));
    CHECK(rep.h1.rhs == Approx(4.75).epsilon(1e-12));
    CHECK(rep.h3.lhs == Approx(0.4375).epsilon(1e-12));
    CHECK(rep.h3.rhs == Approx(1.0).epsilon(1e-12));
    CHECK(rep.all_pass);
  }

  SUBCASE("beta = 3 fails H2") {
    const HypothesisReport rep = check_hypotheses(eq16(2.0, 3.0));
    CHECK(rep.h2.lhs == Approx(3.75 / kE + 2.5).epsilon(1e-12));
    CHECK(rep.h2.rhs == Approx(3.5).epsilon(1e-12));
    CHECK_FALSE(rep.h2.pass);
    CHECK_FALSE(rep.all_pass);
    CHECK(rep.h1.pass);
    CHECK(rep.h3.pass);
    CHECK(rep.h4.pass);
  }

  SUBCASE("exact equality fails and is marginal") {
    // b1 = e makes b1+/e + delta12+ equal delta11- exactly.
    auto k = [](double v) { return PeriodicCoefficient::constant(v, kTwoPi); };
    NicholsonSystem sys{MortalityTerm{k(2.0), k(1.0)}, MortalityTerm{k(1.0), k(1.0)},
                        MortalityTerm{k(1.0), k(1.0)}, MortalityTerm{k(2.0), k(1.0)},
                        {},
                        {},
                        kTwoPi};
    sys.births1.push_back(BirthTerm{k(kE), k(1.0)});
    sys.births2.push_back(BirthTerm{k(1.0), k(1.0)});
    const HypothesisReport rep = check_hypotheses(sys);
    CHECK_FALSE(rep.h1.pass);
    CHECK(rep.h1.marginal);
  }
}

TEST_CASE("multi-delay reduction: a singleton birth list gives the plain conditions") {
  NicholsonSystem one = eq16(2.0, 2.0);
  NicholsonSystem split = one;
  const PeriodicCoefficient half = one.births1[0].b.scaled(0.5);
  split.births1 = {BirthTerm{half, one.births1[0].tau}, BirthTerm{half, one.births1[0].tau}};

  const HypothesisReport a = check_hypotheses(one);
  const HypothesisReport b = check_hypotheses(split);
  CHECK(a.h1.lhs == Approx(b.h1.lhs).epsilon(1e-14));
  CHECK(a.h3.rhs == Approx(b.h3.rhs).epsilon(1e-14));
}

TEST_CASE("Chen-Wang integrals and conditions on the example") {
  const ChenWangReport cw = check_chen_wang(eq16(2.0, 2.0), 256);
  const double pi = std::numbers::pi;
  CHECK(cw.A1 == Approx(5.0 * pi).epsilon(1e-9));
  CHECK(cw.C1 == Approx(10.0 * pi).epsilon(1e-9));
  CHECK(cw.D1 == Approx(4.0 * pi).epsilon(1e-9));
  CHECK(cw.C2 == Approx(8.0 * pi).epsilon(1e-9));
  CHECK(cw.D2 == Approx(4.0 * pi).epsilon(1e-9));
  CHECK(cw.c_vs_d_1.pass);      // C1 > 2 D1
  CHECK_FALSE(cw.c_vs_d_2.pass);  // C2 = 2 D2
  CHECK(cw.c_vs_d_2.marginal);
  CHECK_FALSE(cw.all_pass);
}

TEST_CASE("Chen-Wang log condition flips at alpha = 1.25 e^{5 pi}") {
  const double flip = 1.25 * std::exp(5.0 * std::numbers::pi);
  CHECK_FALSE(check_chen_wang(eq16(flip * (1.0 - 1e-6), 2.0), 256).log_1.pass);
  CHECK(check_chen_wang(eq16(flip * (1.0 + 1e-6), 2.0), 256).log_1.pass);
}

TEST_CASE("Chen-Wang on a constant-coefficient system") {
  auto k = [](double v) { return PeriodicCoefficient::constant(v, kTwoPi); };
  NicholsonSystem sys{MortalityTerm{k(1.0), k(1.0)}, MortalityTerm{k(1.0), k(1.0)},
                      MortalityTerm{k(1.0), k(1.0)}, MortalityTerm{k(1.0), k(1.0)},
                      {},
                      {},
                      kTwoPi};
  sys.births1.push_back(BirthTerm{k(1.0), k(1.0)});
  sys.births2.push_back(BirthTerm{k(1.0), k(1.0)});
  const ChenWangReport cw = check_chen_wang(sys, 256);
  const double pi = std::numbers::pi;
  CHECK(cw.A1 == Approx(4.0 * pi).epsilon(1e-12));
  CHECK(cw.B1 == Approx(2.0 * pi).epsilon(1e-12));
  CHECK(cw.C1 == Approx(2.0 * pi).epsilon(1e-12));
  CHECK(cw.D1 == Approx(2.0 * pi).epsilon(1e-12));
}

TEST_CASE("admissible intervals of the example") {
  const SystemConfig cfg = eq16_config();

  const Interval ia =
      admissible_parameter_interval(cfg.build_unit_scalar("alpha"), cfg.scalar_patch("alpha"));
  CHECK(ia.lo == Approx(7.0 / 8.0).epsilon(1e-12));
  CHECK(ia.hi == Approx(5.0 / 3.0 * kE).epsilon(1e-12));

  const Interval ib =
      admissible_parameter_interval(cfg.build_unit_scalar("beta"), cfg.scalar_patch("beta"));
  CHECK(ib.lo == Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(ib.hi == Approx(4.0 / 5.0 * kE).epsilon(1e-12));
}

TEST_CASE("interval endpoints are the exact hypothesis roots") {
  const SystemConfig cfg = eq16_config();
  const Interval ia =
      admissible_parameter_interval(cfg.build_unit_scalar("alpha"), cfg.scalar_patch("alpha"));
  const double beta_mid = 1.5;  // inside the beta interval

  const double mid = 0.5 * (ia.lo + ia.hi);
  CHECK(check_hypotheses(eq16(mid, beta_mid)).all_pass);
  CHECK_FALSE(check_hypotheses(eq16(ia.lo - 1e-6, beta_mid)).all_pass);
  CHECK_FALSE(check_hypotheses(eq16(ia.hi + 1e-6, beta_mid)).all_pass);
  CHECK(check_hypotheses(eq16(ia.lo + 1e-6, beta_mid)).all_pass);
  CHECK(check_hypotheses(eq16(ia.hi - 1e-6, beta_mid)).all_pass);
}

TEST_CASE("empty interval when H1 is unsatisfiable") {
  // delta12+ >= delta11- leaves no room for any s > 0.
  auto k = [](double v) { return PeriodicCoefficient::constant(v, kTwoPi); };
  NicholsonSystem sys{MortalityTerm{k(2.0), k(1.0)}, MortalityTerm{k(5.0), k(1.0)},
                      MortalityTerm{k(1.0), k(1.0)}, MortalityTerm{k(2.0), k(1.0)},
                      {},
                      {},
                      kTwoPi};
  sys.births1.push_back(BirthTerm{k(1.0), k(1.0)});
  sys.births2.push_back(BirthTerm{k(1.0), k(1.0)});
  CHECK_THROWS_AS(admissible_parameter_interval(sys, 0), EmptyInterval);
}
