#include "nicholson/sweep.hpp"

#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nicholson/analysis.hpp"
#include "nicholson/errors.hpp"
#include "nicholson/periodic.hpp"

namespace nicholson {

SweepAxis SweepAxis::linspace(std::string scalar, double lo, double hi, int n) {
  SweepAxis axis;
  axis.scalar = std::move(scalar);
  if (n == 1) {
    axis.values.push_back(lo);
  } else {
    for (int i = 0; i < n; ++i) {
      axis.values.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    }
  }
  return axis;
}

namespace {

SweepPoint classify(const SystemConfig& cfg, const std::vector<SweepAxis>& axes,
                    const std::vector<double>& values, const SweepOptions& opts) {
  SweepPoint pt;
  pt.values = values;
  std::map<std::string, double> overrides;
  for (std::size_t a = 0; a < axes.size(); ++a) overrides[axes[a].scalar] = values[a];

  std::optional<NicholsonSystem> built;
  try {
    built.emplace(cfg.build_with(overrides));
  } catch (const ConfigError&) {
    // e.g. a scalar value that drives a birth rate non-positive
    return pt;
  }
  const NicholsonSystem& sys = *built;
  pt.hypotheses_pass = check_hypotheses(sys).all_pass;
  try {
    pt.chen_wang_pass = check_chen_wang(sys, opts.quad_n).all_pass;
  } catch (const ConfigError&) {
    // multi-delay systems fall outside the comparison criterion
    pt.chen_wang_pass = false;
  }
  if (opts.find_orbits && pt.hypotheses_pass) {
    const HistorySegment history = HistorySegment::constant(
        cfg.simulation.history, 0.0, sys.max_delay() + sys.omega);
    try {
      FindPeriodicOptions po;
      po.max_periods = cfg.simulation.periods;
      po.tol = cfg.simulation.residual_tol;
      po.h = sys.omega / cfg.simulation.steps_per_period;
      const PeriodicOrbit orbit = find_periodic(sys, history, po);
      pt.orbit_found = true;
      pt.orbit_residual = orbit.residual;
    } catch (const NotConverged& nc) {
      pt.orbit_found = false;
      pt.orbit_residual = nc.last_residual;
    }
  }
  return pt;
}

std::vector<std::vector<double>> grid_points(const std::vector<SweepAxis>& axes) {
  std::vector<std::vector<double>> pts{{}};
  for (const SweepAxis& axis : axes) {
    std::vector<std::vector<double>> next;
    next.reserve(pts.size() * axis.values.size());
    for (const auto& base : pts) {
      for (double v : axis.values) {
        auto p = base;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    pts = std::move(next);
  }
  if (axes.empty()) pts.clear();
  return pts;
}

}  // namespace

std::vector<SweepPoint> run_sweep_serial(const SystemConfig& cfg,
                                         const std::vector<SweepAxis>& axes,
                                         const SweepOptions& opts) {
  const auto grid = grid_points(axes);
  std::vector<SweepPoint> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = classify(cfg, axes, grid[i], opts);
  return out;
}

std::vector<SweepPoint> run_sweep(const SystemConfig& cfg, const std::vector<SweepAxis>& axes,
                                  const SweepOptions& opts) {
  const auto grid = grid_points(axes);
  std::vector<SweepPoint> out(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i] = classify(cfg, axes, grid[i], opts);
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepAxis>& axes, const std::vector<SweepPoint>& points,
                      bool with_orbits) {
  std::ostringstream os;
  os.precision(17);
  for (const SweepAxis& axis : axes) os << axis.scalar << ",";
  os << "h_pass,cw_pass";
  if (with_orbits) os << ",orbit_found,orbit_residual";
  os << "\n";
  for (const SweepPoint& pt : points) {
    for (double v : pt.values) os << v << ",";
    os << (pt.hypotheses_pass ? 1 : 0) << "," << (pt.chen_wang_pass ? 1 : 0);
    if (with_orbits) os << "," << (pt.orbit_found ? 1 : 0) << "," << pt.orbit_residual;
    os << "\n";
  }
  return os.str();
}

}  // namespace nicholson
