#ifndef NICHOLSON_PERIODIC_HPP
#define NICHOLSON_PERIODIC_HPP

#include <vector>

#include "nicholson/bounds.hpp"
#include "nicholson/dde.hpp"
#include "nicholson/model.hpp"

namespace nicholson {

/// One period of a detected orbit: uniform samples of (time mod omega, state),
/// the period-map residual, and the equation defect.
struct PeriodicOrbit {
  double omega = 0.0;
  std::vector<double> times;       // within [0, omega)
  std::vector<State> samples;
  double residual = 0.0;           // sup |X(t) - X(t - omega)|
  double defect = 0.0;             // sup |X'(t) - RHS(t, X, delayed)|
};

/// Sup over a uniform grid on [t_end - omega, t_end] of the max-norm
/// difference |X(t) - X(t - omega)|. The trajectory must cover two periods.
double periodicity_residual(const Trajectory& traj, double omega, double t_end,
                            int grid = 512);

struct FindPeriodicOptions {
  int max_periods = 20;
  double tol = 1e-4;
  double h = 0.0;      // 0: omega/1024
  int orbit_nodes = 512;
};

/// Integrate period by period until the period-map residual drops below tol,
/// then extract the last period and its defect. Throws NotConverged after
/// max_periods; a slowly attracting or unstable orbit is not a disproof of
/// existence.
PeriodicOrbit find_periodic(const NicholsonSystem& sys, const HistorySegment& history,
                            const FindPeriodicOptions& opts = {});

/// True iff every orbit sample lies in [rect.lo, rect.hi] componentwise.
bool verify_in_rectangle(const PeriodicOrbit& orbit, const Rectangle& rect);

}  // namespace nicholson

#endif  // NICHOLSON_PERIODIC_HPP
