#ifndef NICHOLSON_DDE_HPP
#define NICHOLSON_DDE_HPP

#include <functional>
#include <vector>

#include "nicholson/model.hpp"

namespace nicholson {

/// Initial data on [t_end - span, t_end]: node times with values and
/// derivatives for cubic Hermite interpolation.
class HistorySegment {
 public:
  HistorySegment(std::vector<double> nodes, std::vector<State> values,
                 std::vector<State> derivatives);

  /// Constant history on [t_end - span, t_end] (derivatives zero).
  static HistorySegment constant(const State& value, double t_end, double span);

  double t_start() const { return nodes_.front(); }
  double t_end() const { return nodes_.back(); }
  State interpolate(double t) const;
  State derivative(double t) const;

 private:
  std::vector<double> nodes_;
  std::vector<State> values_;
  std::vector<State> derivs_;
};

/// Dense solution record: integrator nodes with states and derivatives, plus
/// the initial history for lookups before the start time. Cubic Hermite
/// between nodes.
class Trajectory {
 public:
  Trajectory(HistorySegment history, double step);

  void push(double t, const State& x, const State& dx);

  double t_start() const { return history_.t_end(); }
  double t_end() const { return times_.empty() ? history_.t_end() : times_.back(); }
  double step() const { return step_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<State>& states() const { return states_; }
  const HistorySegment& history() const { return history_; }

  /// State at t; exact at nodes, O(h^4) between them. Throws OutOfRange
  /// outside [history start, t_end].
  State interpolate(double t) const;

  /// Hermite derivative at t; equals the stored field value at nodes.
  State derivative(double t) const;

 private:
  HistorySegment history_;
  double step_;
  std::vector<double> times_;
  std::vector<State> states_;
  std::vector<State> derivs_;
};

/// Vector field with per-patch delayed arguments, one per delay function.
struct DelayedField {
  std::function<State(double t, const State& x, std::span<const double> x1_delayed,
                      std::span<const double> x2_delayed)>
      f;
  std::vector<PeriodicCoefficient> delays1, delays2;
};

/// Method-of-steps RK4 with Hermite dense output. Requires h below the
/// smallest delay so every stage lookup lands in completed history.
Trajectory integrate(const DelayedField& field, const HistorySegment& history, double t_final,
                     double h);

/// Continue an already started trajectory up to t_final with its own step.
void extend(Trajectory& traj, const DelayedField& field, double t_final);

/// Field view of a system; the system must outlive the returned value.
DelayedField make_field(const NicholsonSystem& sys);

/// Eq.-style two-patch system integration (lambda = 1).
Trajectory integrate(const NicholsonSystem& sys, const HistorySegment& history, double t_final,
                     double h);

inline State interpolate(const Trajectory& traj, double t) { return traj.interpolate(t); }

}  // namespace nicholson

#endif  // NICHOLSON_DDE_HPP
