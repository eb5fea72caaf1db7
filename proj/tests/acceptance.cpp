// Acceptance gate: one PASS/FAIL line per shipped guarantee. Exits nonzero
// when any criterion fails. Tolerances are pinned in each criterion body.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "nicholson/analysis.hpp"
#include "nicholson/bounds.hpp"
#include "nicholson/config.hpp"
#include "nicholson/dde.hpp"
#include "nicholson/degree.hpp"
#include "nicholson/errors.hpp"
#include "nicholson/periodic.hpp"
#include "nicholson/sweep.hpp"

using namespace nicholson;
using nicholson::testing::eq16;
using nicholson::testing::eq16_config;

namespace {

const double kE = std::numbers::e;
const double kPi = std::numbers::pi;
const double kTwoPi = 2.0 * kPi;

bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// 1. Admissible parameter intervals of the example: alpha in (7/8, (5/3)e),
//    beta in (5/6, (4/5)e), endpoints within 1e-10.
bool criterion_intervals() {
  const SystemConfig cfg = eq16_config();
  const Interval ia =
      admissible_parameter_interval(cfg.build_unit_scalar("alpha"), cfg.scalar_patch("alpha"));
  const Interval ib =
      admissible_parameter_interval(cfg.build_unit_scalar("beta"), cfg.scalar_patch("beta"));
  return close_abs(ia.lo, 7.0 / 8.0, 1e-10) && close_abs(ia.hi, 5.0 / 3.0 * kE, 1e-10) &&
         close_abs(ib.lo, 5.0 / 6.0, 1e-10) && close_abs(ib.hi, 4.0 / 5.0 * kE, 1e-10);
}

// 2. Chen-Wang quadrature values within 1e-9 relative; C2 > 2 D2 fails; a
//    sweep shows no grid point passing the comparison criterion while (2,2)
//    passes (H1)-(H4).
bool criterion_chen_wang() {
  const ChenWangReport cw = check_chen_wang(eq16(2.0, 2.0), 256);
  if (!(close_rel(cw.A1, 5.0 * kPi, 1e-9) && close_rel(cw.C1, 10.0 * kPi, 1e-9) &&
        close_rel(cw.D1, 4.0 * kPi, 1e-9) && close_rel(cw.C2, 8.0 * kPi, 1e-9) &&
        close_rel(cw.D2, 4.0 * kPi, 1e-9))) {
    return false;
  }
  if (cw.c_vs_d_2.pass || cw.all_pass) return false;

  const SystemConfig cfg = eq16_config();
  const std::vector<SweepAxis> axes{SweepAxis::linspace("alpha", 1.0, 4.0, 7),
                                    SweepAxis::linspace("beta", 1.0, 4.0, 7)};
  bool any_h = false;
  for (const SweepPoint& pt : run_sweep(cfg, axes, {})) {
    if (pt.chen_wang_pass) return false;
    any_h |= pt.hypotheses_pass;
  }
  return any_h && check_hypotheses(eq16(2.0, 2.0)).all_pass;
}

// 3. The documented inconsistency: (alpha, beta) = (2, 3) fails H2 with
//    lhs = 3.75/e + 2.5 ~ 3.8796 against rhs 3.5.
bool criterion_inconsistency() {
  const HypothesisReport rep = check_hypotheses(eq16(2.0, 3.0));
  return !rep.h2.pass && !rep.all_pass && close_abs(rep.h2.lhs, 3.75 / kE + 2.5, 1e-12) &&
         close_abs(rep.h2.rhs, 3.5, 1e-12) && std::abs(rep.h2.lhs - 3.8796) < 1e-3;
}

// 4. Bounds invariants at (2,2) plus the closed-form-vs-bisection property
//    over 100 random admissible parameter draws.
bool criterion_bounds() {
  const BoundsReport rep = build_rectangle(eq16(2.0, 2.0));
  if (!(rep.eps0 > 0.0 && rep.eps0 < rep.r1 && rep.r1 <= 1.0 && 1.0 <= rep.r0)) return false;
  if (std::abs(birth_f(rep.r1) - birth_f(rep.r0)) > 1e-12) return false;

  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> d(1.0, 10.0), c(0.5, 8.0), frac(0.05, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double delta_inf = d(rng), c_sup = c(rng);
    const double k = frac(rng) * delta_inf;
    const double dij_sup = frac(rng) * k;
    const double b_sup = (k - dij_sup) * kE;

    double lo = 0.0, hi = 1e6;
    for (int j = 0; j < 200; ++j) {
      const double mid = 0.5 * (lo + hi);
      (delta_inf * mid / (c_sup + mid) - k < 0.0 ? lo : hi) = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    if (!close_rel(upper_threshold(delta_inf, c_sup, b_sup, dij_sup), oracle, 1e-10)) {
      return false;
    }
  }
  return true;
}

// 5. Degree certificate on the (2,2) rectangle and exact analytic degrees.
bool criterion_degree() {
  const NicholsonSystem sys = eq16(2.0, 2.0);
  const BoundsReport rep = build_rectangle(sys);
  const AveragedMap g(sys, 256);

  const MirandaCertificate cert = miranda_check(g, rep.rect, 256);
  if (!cert.pattern_holds || !(cert.min_abs_value_on_edges > 0.0)) return false;
  if (brouwer_degree(g, rep.rect) != 1) return false;

  const Rectangle box{-1.0, 1.0};
  const PlanarMap identity = [](const State& x) { return x; };
  const PlanarMap flip = [](const State& x) { return State{x[0], -x[1]}; };
  return brouwer_degree(identity, box) == 1 && brouwer_degree(flip, box) == -1;
}

// 6. Integrator order: x' = -x(t-1) hits x(1) = 0 within 1e-10; on the
//    example system (step sizes dividing the delay), halving h cuts the
//    terminal error against an h/16 reference by >= 12.
bool criterion_integrator() {
  DelayedField field;
  field.delays1 = {PeriodicCoefficient::constant(1.0, kTwoPi)};
  field.f = [](double, const State&, std::span<const double> d1, std::span<const double>) {
    return State{-d1[0], 0.0};
  };
  const HistorySegment hist = HistorySegment::constant({1.0, 0.0}, 0.0, 1.0);
  const Trajectory traj = integrate(field, hist, 1.0, 0.1);
  if (std::abs(traj.interpolate(1.0)[0]) > 1e-10) return false;

  const NicholsonSystem sys = eq16(2.0, 3.0);
  const HistorySegment h16 = HistorySegment::constant({1.0, 1.0}, 0.0, sys.max_delay());
  auto terminal = [&](double h) { return integrate(sys, h16, 14.0, h).interpolate(14.0); };
  const State ref = terminal(7.0 / 2048.0);
  auto err = [&](double h) {
    const State x = terminal(h);
    return std::max(std::abs(x[0] - ref[0]), std::abs(x[1] - ref[1]));
  };
  return err(7.0 / 128.0) / err(7.0 / 256.0) >= 12.0;
}

// 7. Periodic orbits: (2,3) from constant history (1,1) converges to
//    residual < 1e-4 with defect < 1e-2, positive and bounded; the (2,2)
//    orbit additionally lies inside the bounds rectangle.
bool criterion_orbit() {
  const SystemConfig cfg = eq16_config();
  FindPeriodicOptions opts;
  opts.max_periods = cfg.simulation.periods;
  opts.tol = cfg.simulation.residual_tol;

  const NicholsonSystem sys23 = eq16(2.0, 3.0);
  const HistorySegment hist23 = HistorySegment::constant({1.0, 1.0}, 0.0, sys23.max_delay());
  PeriodicOrbit orbit;
  try {
    orbit = find_periodic(sys23, hist23, opts);
  } catch (const NotConverged&) {
    return false;
  }
  if (!(orbit.residual < 1e-4 && orbit.defect < 1e-2)) return false;
  for (const State& x : orbit.samples) {
    if (!(x[0] > 0.0 && x[1] > 0.0 && x[0] < 1e3 && x[1] < 1e3)) return false;
  }

  const NicholsonSystem sys22 = eq16(2.0, 2.0);
  const HistorySegment hist22 = HistorySegment::constant({1.0, 1.0}, 0.0, sys22.max_delay());
  PeriodicOrbit orbit22;
  try {
    orbit22 = find_periodic(sys22, hist22, opts);
  } catch (const NotConverged&) {
    return false;
  }
  return verify_in_rectangle(orbit22, build_rectangle(sys22).rect);
}

// 8. Averaged map vs the closed-form mean-coefficient expression at 100
//    random states, 1e-9.
bool criterion_averaged_map() {
  const AveragedMap g(eq16(2.0, 2.0), 256);
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> xs(0.01, 50.0);
  for (int i = 0; i < 100; ++i) {
    const State x{xs(rng), xs(rng)};
    const State got = g(x);
    const double want1 =
        5.0 * x[0] / (4.0 + x[0]) - 2.0 * x[0] * std::exp(-x[0]) - 2.0 * x[1] / (2.0 + x[1]);
    const double want2 =
        4.0 * x[1] / (4.0 + x[1]) - 2.0 * x[1] * std::exp(-x[1]) - 2.0 * x[0] / (3.0 + x[0]);
    if (!close_abs(got[0], want1, 1e-9) || !close_abs(got[1], want2, 1e-9)) return false;
  }
  return true;
}

int run(const char* name, bool (*fn)()) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const double secs = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%-4s %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", name, secs, note.c_str());
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run("1 admissible parameter intervals", criterion_intervals);
  failures += run("2 Chen-Wang integrals and sweep", criterion_chen_wang);
  failures += run("3 H2 inconsistency at (2,3)", criterion_inconsistency);
  failures += run("4 a priori bounds consistency", criterion_bounds);
  failures += run("5 degree certificate", criterion_degree);
  failures += run("6 integrator order", criterion_integrator);
  failures += run("7 periodic orbits", criterion_orbit);
  failures += run("8 averaged-map oracle", criterion_averaged_map);
  return failures == 0 ? 0 : 1;
}
