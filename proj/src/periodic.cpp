#include "nicholson/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nicholson/errors.hpp"

namespace nicholson {

double periodicity_residual(const Trajectory& traj, double omega, double t_end, int grid) {
  if (t_end - 2.0 * omega < traj.history().t_start() - 1e-9 || t_end > traj.t_end() + 1e-9) {
    throw OutOfRange("periodicity residual needs the trajectory to cover [t_end - 2*omega, t_end]");
  }
  double res = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double t = t_end - omega + omega * static_cast<double>(i) / grid;
    const State a = traj.interpolate(std::min(t, traj.t_end()));
    const State b = traj.interpolate(t - omega);
    res = std::max({res, std::abs(a[0] - b[0]), std::abs(a[1] - b[1])});
  }
  return res;
}

PeriodicOrbit find_periodic(const NicholsonSystem& sys, const HistorySegment& history,
                            const FindPeriodicOptions& opts) {
  if (opts.max_periods < 3) throw std::invalid_argument("max_periods must be >= 3");
  const double omega = sys.omega;
  const double h = opts.h > 0.0 ? opts.h : omega / 1024.0;
  const DelayedField field = make_field(sys);

  Trajectory traj(history, h);
  const double t0 = history.t_end();
  double residual = std::numeric_limits<double>::infinity();
  int period = 0;
  for (period = 1; period <= opts.max_periods; ++period) {
    extend(traj, field, t0 + period * omega);
    if (period < 2) continue;
    residual = periodicity_residual(traj, omega, traj.t_end());
    if (residual < opts.tol) break;
  }
  if (!(residual < opts.tol)) {
    throw NotConverged(opts.max_periods, residual,
                       "no periodic orbit after " + std::to_string(opts.max_periods) +
                           " periods (last residual " + std::to_string(residual) + ")");
  }

  PeriodicOrbit orbit;
  orbit.omega = omega;
  orbit.residual = residual;
  const double t_end = traj.t_end();
  std::vector<double> d1(sys.births1.size()), d2(sys.births2.size());
  for (int i = 0; i < opts.orbit_nodes; ++i) {
    const double t = t_end - omega + omega * static_cast<double>(i) / opts.orbit_nodes;
    orbit.times.push_back(std::fmod(std::fmod(t, omega) + omega, omega));
    orbit.samples.push_back(traj.interpolate(t));

    const State xd = traj.derivative(t);
    for (std::size_t j = 0; j < sys.births1.size(); ++j) {
      d1[j] = traj.interpolate(t - sys.births1[j].tau.eval(t))[0];
    }
    for (std::size_t j = 0; j < sys.births2.size(); ++j) {
      d2[j] = traj.interpolate(t - sys.births2[j].tau.eval(t))[1];
    }
    const State f = rhs(sys, t, orbit.samples.back(), d1, d2, 1.0);
    orbit.defect = std::max({orbit.defect, std::abs(xd[0] - f[0]), std::abs(xd[1] - f[1])});
  }
  return orbit;
}

bool verify_in_rectangle(const PeriodicOrbit& orbit, const Rectangle& rect) {
  return std::all_of(orbit.samples.begin(), orbit.samples.end(), [&](const State& x) {
    return x[0] >= rect.lo && x[0] <= rect.hi && x[1] >= rect.lo && x[1] <= rect.hi;
  });
}

}  // namespace nicholson
