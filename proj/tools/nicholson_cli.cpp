// Command-line front end: hypothesis checks, a priori bounds, degree
// certificates, DDE simulation, periodic-orbit search, and parameter sweeps.
//
// Exit codes: 0 success / all checks pass, 1 analysis negative or
// non-convergence, 2 usage or config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nicholson/analysis.hpp"
#include "nicholson/bounds.hpp"
#include "nicholson/config.hpp"
#include "nicholson/dde.hpp"
#include "nicholson/degree.hpp"
#include "nicholson/errors.hpp"
#include "nicholson/periodic.hpp"
#include "nicholson/sweep.hpp"

using nlohmann::json;
using namespace nicholson;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> sets;  // name=value scalar overrides
  std::string jsonl_path;
};

struct Records {
  std::optional<std::ofstream> out;

  explicit Records(const std::string& path) {
    if (!path.empty()) out.emplace(path);
  }
  void emit(const json& j) {
    if (out) *out << j.dump() << "\n";
  }
};

std::map<std::string, double> parse_sets(const std::vector<std::string>& sets) {
  std::map<std::string, double> overrides;
  for (const std::string& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects name=value, got '" + s + "'");
    overrides[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
  }
  return overrides;
}

SystemConfig load_config(const CommonOpts& opts) {
  if (opts.config_path.empty()) throw ConfigError("--config is required");
  return SystemConfig::load(opts.config_path);
}

void print_condition(const ConditionResult& c) {
  std::printf("  %-16s lhs = %.12g  rhs = %.12g  margin = %.12g  %s%s\n", c.name.c_str(), c.lhs,
              c.rhs, c.margin, c.pass ? "PASS" : "FAIL", c.marginal ? " (marginal)" : "");
}

json condition_json(const ConditionResult& c) {
  return {{"record", "condition"}, {"name", c.name},     {"lhs", c.lhs},
          {"rhs", c.rhs},          {"margin", c.margin}, {"pass", c.pass},
          {"marginal", c.marginal}};
}

void write_csv(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << content;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string s = "t,x1,x2\n";
  char line[128];
  for (std::size_t i = 0; i < traj.times().size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", traj.times()[i],
                  traj.states()[i][0], traj.states()[i][1]);
    s += line;
  }
  return s;
}

std::string orbit_csv(const PeriodicOrbit& orbit) {
  std::string s = "t,x1,x2\n";
  char line[128];
  for (std::size_t i = 0; i < orbit.times.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", orbit.times[i],
                  orbit.samples[i][0], orbit.samples[i][1]);
    s += line;
  }
  return s;
}

int cmd_check(const CommonOpts& common) {
  const SystemConfig cfg = load_config(common);
  const NicholsonSystem sys = cfg.build_with(parse_sets(common.sets));
  Records rec(common.jsonl_path);

  const HypothesisReport hyp = check_hypotheses(sys);
  std::printf("Hypotheses (H1)-(H4):\n");
  for (const ConditionResult* c : {&hyp.h1, &hyp.h2, &hyp.h3, &hyp.h4}) {
    print_condition(*c);
    rec.emit(condition_json(*c));
  }
  std::printf("  all pass: %s\n", hyp.all_pass ? "yes" : "no");

  if (sys.births1.size() == 1 && sys.births2.size() == 1) {
    const ChenWangReport cw = check_chen_wang(sys, default_quadrature_samples());
    std::printf("Chen-Wang comparison:\n");
    std::printf("  A1 = %.12g  A2 = %.12g  B1 = %.12g  B2 = %.12g\n", cw.A1, cw.A2, cw.B1,
                cw.B2);
    std::printf("  C1 = %.12g  C2 = %.12g  D1 = %.12g  D2 = %.12g\n", cw.C1, cw.C2, cw.D1,
                cw.D2);
    rec.emit({{"record", "chen_wang_integrals"},
              {"A1", cw.A1},
              {"A2", cw.A2},
              {"B1", cw.B1},
              {"B2", cw.B2},
              {"C1", cw.C1},
              {"C2", cw.C2},
              {"D1", cw.D1},
              {"D2", cw.D2}});
    for (const ConditionResult* c : {&cw.smallness1, &cw.smallness2, &cw.c_vs_d_1, &cw.c_vs_d_2,
                                     &cw.log_1, &cw.log_2}) {
      print_condition(*c);
      rec.emit(condition_json(*c));
    }
    std::printf("  all pass: %s\n", cw.all_pass ? "yes" : "no");
  }

  for (const auto& [name, value] : cfg.scalars) {
    try {
      const Interval iv =
          admissible_parameter_interval(cfg.build_unit_scalar(name), cfg.scalar_patch(name));
      std::printf("Admissible interval for %s: (%.15g, %.15g)  [current %.15g]\n", name.c_str(),
                  iv.lo, iv.hi, value);
      rec.emit({{"record", "interval"}, {"scalar", name}, {"lo", iv.lo}, {"hi", iv.hi}});
    } catch (const EmptyInterval& e) {
      std::printf("Admissible interval for %s: empty (%s)\n", name.c_str(), e.what());
      rec.emit({{"record", "interval"}, {"scalar", name}, {"empty", true}});
    }
  }
  return hyp.all_pass ? kExitPass : kExitNegative;
}

json bounds_json(const BoundsReport& rep) {
  return {{"record", "bounds"},
          {"r0_patch1", rep.r0_patch1},
          {"r0_patch2", rep.r0_patch2},
          {"r0", rep.r0},
          {"r1", rep.r1},
          {"eps_star_patch1", rep.eps_star_patch1},
          {"eps_star_patch2", rep.eps_star_patch2},
          {"eps0", rep.eps0},
          {"rect_lo", rep.rect.lo},
          {"rect_hi", rep.rect.hi}};
}

void print_bounds(const BoundsReport& rep) {
  std::printf("A priori bounds:\n");
  std::printf("  R0 patch 1 = %.15g\n", rep.r0_patch1);
  std::printf("  R0 patch 2 = %.15g\n", rep.r0_patch2);
  std::printf("  R0 = %.15g\n", rep.r0);
  std::printf("  R1 = %.15g\n", rep.r1);
  std::printf("  eps* patch 1 = %.15g\n", rep.eps_star_patch1);
  std::printf("  eps* patch 2 = %.15g\n", rep.eps_star_patch2);
  std::printf("  eps0 = %.15g\n", rep.eps0);
  std::printf("  rectangle: (%.15g, %.15g)^2\n", rep.rect.lo, rep.rect.hi);
}

int cmd_bounds(const CommonOpts& common) {
  const SystemConfig cfg = load_config(common);
  const NicholsonSystem sys = cfg.build_with(parse_sets(common.sets));
  Records rec(common.jsonl_path);
  try {
    const BoundsReport rep = build_rectangle(sys);
    print_bounds(rep);
    rec.emit(bounds_json(rep));
    return kExitPass;
  } catch (const HypothesisViolated& e) {
    std::printf("hypothesis violated: %s\n", e.what());
    rec.emit({{"record", "bounds"}, {"error", e.what()}});
    return kExitNegative;
  }
}

int cmd_degree(const CommonOpts& common, int samples) {
  const SystemConfig cfg = load_config(common);
  const NicholsonSystem sys = cfg.build_with(parse_sets(common.sets));
  Records rec(common.jsonl_path);

  BoundsReport rep;
  try {
    rep = build_rectangle(sys);
  } catch (const HypothesisViolated& e) {
    std::printf("hypothesis violated: %s\n", e.what());
    return kExitNegative;
  }
  print_bounds(rep);
  rec.emit(bounds_json(rep));

  const AveragedMap g(sys, default_quadrature_samples());
  const PlanarMap map = [&g](const State& x) { return g(x); };
  const MirandaCertificate cert = miranda_check(map, rep.rect, samples);
  std::printf("Miranda certificate: pattern %s, min |g| on edges = %.15g (%d samples/edge)\n",
              cert.pattern_holds ? "HOLDS" : "FAILS", cert.min_abs_value_on_edges,
              cert.samples_per_edge);
  rec.emit({{"record", "miranda"},
            {"pattern_holds", cert.pattern_holds},
            {"min_abs_value_on_edges", cert.min_abs_value_on_edges},
            {"samples_per_edge", cert.samples_per_edge}});
  if (!cert.pattern_holds) return kExitNegative;

  try {
    const int deg = brouwer_degree(map, rep.rect);
    std::printf("Brouwer degree of g on the rectangle: %d\n", deg);
    rec.emit({{"record", "degree"}, {"value", deg}});
    const State root = find_root_g(map, rep.rect);
    const State res = g(root);
    std::printf("Root of g: (%.15g, %.15g), |g| = %.3g\n", root[0], root[1],
                std::max(std::abs(res[0]), std::abs(res[1])));
    rec.emit({{"record", "root"}, {"x1", root[0]}, {"x2", root[1]}});
    return deg != 0 ? kExitPass : kExitNegative;
  } catch (const ZeroOnBoundary& e) {
    std::printf("degree undefined: %s\n", e.what());
    return kExitNegative;
  }
}

int cmd_simulate(const CommonOpts& common, double t_final, double step, const std::string& out) {
  const SystemConfig cfg = load_config(common);
  const NicholsonSystem sys = cfg.build_with(parse_sets(common.sets));
  const double omega = sys.omega;
  if (t_final <= 0.0) t_final = cfg.simulation.periods * omega;
  const double h = step > 0.0 ? step : omega / cfg.simulation.steps_per_period;

  const HistorySegment history =
      HistorySegment::constant(cfg.simulation.history, 0.0, sys.max_delay() + h);
  try {
    const Trajectory traj = integrate(sys, history, t_final, h);
    write_csv(out, trajectory_csv(traj));
    if (t_final >= 2.0 * omega) {
      const double res = periodicity_residual(traj, omega, traj.t_end());
      std::fprintf(stderr, "final periodicity residual: %.15g\n", res);
    }
    return kExitPass;
  } catch (const PoleError& e) {
    std::fprintf(stderr, "pole hit: %s\n", e.what());
    return kExitNegative;
  } catch (const NonFiniteState& e) {
    std::fprintf(stderr, "blow-up: %s\n", e.what());
    return kExitNegative;
  }
}

int cmd_find_periodic(const CommonOpts& common, double tol, const std::string& out) {
  const SystemConfig cfg = load_config(common);
  const NicholsonSystem sys = cfg.build_with(parse_sets(common.sets));
  Records rec(common.jsonl_path);

  FindPeriodicOptions po;
  po.max_periods = cfg.simulation.periods;
  po.tol = tol > 0.0 ? tol : cfg.simulation.residual_tol;
  po.h = sys.omega / cfg.simulation.steps_per_period;
  const HistorySegment history =
      HistorySegment::constant(cfg.simulation.history, 0.0, sys.max_delay() + po.h);
  try {
    const PeriodicOrbit orbit = find_periodic(sys, history, po);
    write_csv(out, orbit_csv(orbit));
    double min1 = orbit.samples[0][0], max1 = min1, min2 = orbit.samples[0][1], max2 = min2;
    for (const State& s : orbit.samples) {
      min1 = std::min(min1, s[0]);
      max1 = std::max(max1, s[0]);
      min2 = std::min(min2, s[1]);
      max2 = std::max(max2, s[1]);
    }
    std::fprintf(stderr, "residual = %.15g, defect = %.15g\n", orbit.residual, orbit.defect);
    std::fprintf(stderr, "orbit range: x1 in [%.15g, %.15g], x2 in [%.15g, %.15g]\n", min1, max1,
                 min2, max2);
    rec.emit({{"record", "orbit"},
              {"residual", orbit.residual},
              {"defect", orbit.defect},
              {"x1_min", min1},
              {"x1_max", max1},
              {"x2_min", min2},
              {"x2_max", max2}});
    try {
      const Rectangle rect = build_rectangle(sys).rect;
      const bool inside = verify_in_rectangle(orbit, rect);
      std::fprintf(stderr, "containment in bounds rectangle (%.6g, %.6g): %s\n", rect.lo,
                   rect.hi, inside ? "yes" : "NO");
      rec.emit({{"record", "containment"}, {"inside", inside}});
    } catch (const HypothesisViolated&) {
      std::fprintf(stderr, "containment: skipped (hypotheses fail, no rectangle)\n");
    }
    return kExitPass;
  } catch (const NotConverged& e) {
    std::fprintf(stderr, "not converged: %s\n", e.what());
    return kExitNegative;
  } catch (const PoleError& e) {
    std::fprintf(stderr, "pole hit: %s\n", e.what());
    return kExitNegative;
  } catch (const NonFiniteState& e) {
    std::fprintf(stderr, "blow-up: %s\n", e.what());
    return kExitNegative;
  }
}

SweepAxis parse_sweep_axis(const std::string& s) {
  // name=lo:hi:n
  const auto eq = s.find('=');
  const auto c1 = s.find(':', eq == std::string::npos ? 0 : eq);
  const auto c2 = s.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos) {
    throw ConfigError("--sweep expects name=lo:hi:n, got '" + s + "'");
  }
  const std::string name = s.substr(0, eq);
  const double lo = std::stod(s.substr(eq + 1, c1 - eq - 1));
  const double hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  const int n = std::stoi(s.substr(c2 + 1));
  if (n < 1) throw ConfigError("--sweep needs n >= 1");
  return SweepAxis::linspace(name, lo, hi, n);
}

int cmd_sweep(const CommonOpts& common, const std::vector<std::string>& sweeps, bool orbits,
              const std::string& out) {
  const SystemConfig cfg = load_config(common);
  std::vector<SweepAxis> axes;
  for (const std::string& s : sweeps) {
    SweepAxis axis = parse_sweep_axis(s);
    if (!cfg.scalars.count(axis.scalar)) {
      throw ConfigError("unknown scalar '" + axis.scalar + "' in sweep");
    }
    axes.push_back(std::move(axis));
  }
  SweepOptions opts;
  opts.find_orbits = orbits;
  opts.quad_n = default_quadrature_samples();
  const auto points = run_sweep(cfg, axes, opts);
  write_csv(out, sweep_csv(axes, points, orbits));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic-solution analysis for two-patch Nicholson systems with "
               "density-dependent mortality"};
  app.require_subcommand(1);

  CommonOpts common;
  double t_final = 0.0, step = 0.0, tol = 0.0;
  int samples = 256;
  std::string out;
  std::vector<std::string> sweeps;
  bool orbits = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", common.config_path, "system config JSON")->required();
    cmd->add_option("--set", common.sets, "scalar override name=value");
    cmd->add_option("--jsonl", common.jsonl_path, "machine-readable record stream path");
  };

  CLI::App* check = app.add_subcommand("check", "evaluate (H1)-(H4), Chen-Wang, intervals");
  add_common(check);
  CLI::App* bounds = app.add_subcommand("bounds", "constructive a priori bounds");
  add_common(bounds);
  CLI::App* degree = app.add_subcommand("degree", "Miranda certificate and Brouwer degree");
  add_common(degree);
  degree->add_option("--samples", samples, "Miranda samples per edge")->check(CLI::Range(16, 1 << 20));
  CLI::App* simulate = app.add_subcommand("simulate", "integrate the DDE, write CSV");
  add_common(simulate);
  simulate->add_option("--t-final", t_final, "integration horizon");
  simulate->add_option("--step", step, "step size");
  simulate->add_option("--out", out, "output CSV path ('-' = stdout)");
  CLI::App* findp = app.add_subcommand("find-periodic", "search for a periodic orbit");
  add_common(findp);
  findp->add_option("--tol", tol, "periodicity residual tolerance");
  findp->add_option("--out", out, "output CSV path ('-' = stdout)");
  CLI::App* sweep = app.add_subcommand("sweep", "classify a scalar parameter grid");
  add_common(sweep);
  sweep->add_option("--sweep", sweeps, "axis name=lo:hi:n (repeatable)")->required();
  sweep->add_flag("--orbits", orbits, "also search for orbits at passing points");
  sweep->add_option("--out", out, "output CSV path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(common);
    if (bounds->parsed()) return cmd_bounds(common);
    if (degree->parsed()) return cmd_degree(common, samples);
    if (simulate->parsed()) return cmd_simulate(common, t_final, step, out);
    if (findp->parsed()) return cmd_find_periodic(common, tol, out);
    if (sweep->parsed()) return cmd_sweep(common, sweeps, orbits, out);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNegative;
  }
  return kExitUsage;
}
