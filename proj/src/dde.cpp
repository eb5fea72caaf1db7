#include "nicholson/dde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nicholson/errors.hpp"

namespace nicholson {

namespace {

State hermite(double t, double t0, double t1, const State& x0, const State& x1,
              const State& d0, const State& d1) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return {h00 * x0[0] + h * h10 * d0[0] + h01 * x1[0] + h * h11 * d1[0],
          h00 * x0[1] + h * h10 * d0[1] + h01 * x1[1] + h * h11 * d1[1]};
}

State hermite_deriv(double t, double t0, double t1, const State& x0, const State& x1,
                    const State& d0, const State& d1) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s;
  const double h00 = (6 * s2 - 6 * s) / h;
  const double h10 = 3 * s2 - 4 * s + 1;
  const double h01 = (-6 * s2 + 6 * s) / h;
  const double h11 = 3 * s2 - 2 * s;
  return {h00 * x0[0] + h10 * d0[0] + h01 * x1[0] + h11 * d1[0],
          h00 * x0[1] + h10 * d0[1] + h01 * x1[1] + h11 * d1[1]};
}

std::size_t bracket(const std::vector<double>& nodes, double t) {
  auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
  if (it == nodes.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
  return std::min(i, nodes.size() - 2);
}

}  // namespace

HistorySegment::HistorySegment(std::vector<double> nodes, std::vector<State> values,
                               std::vector<State> derivatives)
    : nodes_(std::move(nodes)), values_(std::move(values)), derivs_(std::move(derivatives)) {
  if (nodes_.size() < 2 || values_.size() != nodes_.size() || derivs_.size() != nodes_.size()) {
    throw ConfigError("history segment needs >= 2 nodes with matching values/derivatives");
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) throw ConfigError("history nodes must increase");
  }
}

HistorySegment HistorySegment::constant(const State& value, double t_end, double span) {
  return HistorySegment({t_end - span, t_end}, {value, value}, {{0.0, 0.0}, {0.0, 0.0}});
}

State HistorySegment::interpolate(double t) const {
  if (t < nodes_.front() - 1e-12 || t > nodes_.back() + 1e-12) {
    throw OutOfRange("history query at t = " + std::to_string(t));
  }
  const std::size_t i = bracket(nodes_, t);
  return hermite(t, nodes_[i], nodes_[i + 1], values_[i], values_[i + 1], derivs_[i],
                 derivs_[i + 1]);
}

State HistorySegment::derivative(double t) const {
  const std::size_t i = bracket(nodes_, t);
  return hermite_deriv(t, nodes_[i], nodes_[i + 1], values_[i], values_[i + 1], derivs_[i],
                       derivs_[i + 1]);
}

Trajectory::Trajectory(HistorySegment history, double step)
    : history_(std::move(history)), step_(step) {}

void Trajectory::push(double t, const State& x, const State& dx) {
  times_.push_back(t);
  states_.push_back(x);
  derivs_.push_back(dx);
}

State Trajectory::interpolate(double t) const {
  if (times_.empty() || t <= history_.t_end()) return history_.interpolate(t);
  if (t > times_.back() + 1e-12) {
    throw OutOfRange("trajectory query at t = " + std::to_string(t) + " past t_end = " +
                     std::to_string(times_.back()));
  }
  if (t >= times_.back()) return states_.back();
  if (t <= times_.front()) {
    // First step interval starts at the history end node.
    return hermite(t, history_.t_end(), times_.front(),
                   history_.interpolate(history_.t_end()), states_.front(),
                   history_.derivative(history_.t_end()), derivs_.front());
  }
  const std::size_t i = bracket(times_, t);
  return hermite(t, times_[i], times_[i + 1], states_[i], states_[i + 1], derivs_[i],
                 derivs_[i + 1]);
}

State Trajectory::derivative(double t) const {
  if (times_.empty() || t <= history_.t_end()) return history_.derivative(t);
  if (t >= times_.back()) return derivs_.back();
  if (t <= times_.front()) {
    return hermite_deriv(t, history_.t_end(), times_.front(),
                         history_.interpolate(history_.t_end()), states_.front(),
                         history_.derivative(history_.t_end()), derivs_.front());
  }
  const std::size_t i = bracket(times_, t);
  return hermite_deriv(t, times_[i], times_[i + 1], states_[i], states_[i + 1], derivs_[i],
                       derivs_[i + 1]);
}

namespace {

void check_step(const DelayedField& field, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
  double min_delay = std::numeric_limits<double>::infinity();
  for (const auto& tau : field.delays1) min_delay = std::min(min_delay, extrema(tau).inf);
  for (const auto& tau : field.delays2) min_delay = std::min(min_delay, extrema(tau).inf);
  if (!(h < min_delay)) {
    throw std::invalid_argument("step size must be below the smallest delay (h = " +
                                std::to_string(h) + ", min delay = " +
                                std::to_string(min_delay) + ")");
  }
}

}  // namespace

void extend(Trajectory& traj, const DelayedField& field, double t_final) {
  const double h = traj.step();
  std::vector<double> d1(field.delays1.size()), d2(field.delays2.size());
  auto eval_field = [&](double t, const State& xs) {
    for (std::size_t j = 0; j < field.delays1.size(); ++j) {
      d1[j] = traj.interpolate(t - field.delays1[j].eval(t))[0];
    }
    for (std::size_t j = 0; j < field.delays2.size(); ++j) {
      d2[j] = traj.interpolate(t - field.delays2[j].eval(t))[1];
    }
    return field.f(t, xs, d1, d2);
  };

  double t = traj.t_end();
  State x = traj.interpolate(t);
  State k1;
  if (traj.times().empty()) {
    k1 = eval_field(t, x);
    traj.push(t, x, k1);
  } else {
    k1 = traj.derivative(t);
  }
  const auto steps = static_cast<long>(std::ceil((t_final - t) / h - 1e-12));
  for (long i = 0; i < steps; ++i) {
    const double hs = std::min(h, t_final - t);
    const State k2 = eval_field(t + 0.5 * hs, {x[0] + 0.5 * hs * k1[0], x[1] + 0.5 * hs * k1[1]});
    const State k3 = eval_field(t + 0.5 * hs, {x[0] + 0.5 * hs * k2[0], x[1] + 0.5 * hs * k2[1]});
    const State k4 = eval_field(t + hs, {x[0] + hs * k3[0], x[1] + hs * k3[1]});
    x = {x[0] + hs / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
         x[1] + hs / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
    t += hs;
    if (!std::isfinite(x[0]) || !std::isfinite(x[1])) {
      throw NonFiniteState("non-finite state at t = " + std::to_string(t));
    }
    k1 = eval_field(t, x);
    traj.push(t, x, k1);
  }
}

Trajectory integrate(const DelayedField& field, const HistorySegment& history, double t_final,
                     double h) {
  check_step(field, h);
  if (!(t_final > history.t_end())) {
    throw std::invalid_argument("t_final must exceed the history end");
  }
  Trajectory traj(history, h);
  extend(traj, field, t_final);
  return traj;
}

DelayedField make_field(const NicholsonSystem& sys) {
  DelayedField field;
  for (const BirthTerm& bt : sys.births1) field.delays1.push_back(bt.tau);
  for (const BirthTerm& bt : sys.births2) field.delays2.push_back(bt.tau);
  field.f = [&sys](double t, const State& x, std::span<const double> x1d,
                   std::span<const double> x2d) { return rhs(sys, t, x, x1d, x2d, 1.0); };
  return field;
}

Trajectory integrate(const NicholsonSystem& sys, const HistorySegment& history, double t_final,
                     double h) {
  return integrate(make_field(sys), history, t_final, h);
}

}  // namespace nicholson
