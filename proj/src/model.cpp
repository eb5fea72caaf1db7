#include "nicholson/model.hpp"

#include <string>

#include "nicholson/errors.hpp"

namespace nicholson {

double NicholsonSystem::max_delay() const {
  double r = 0.0;
  for (const BirthTerm& bt : births1) r = std::max(r, extrema(bt.tau).sup);
  for (const BirthTerm& bt : births2) r = std::max(r, extrema(bt.tau).sup);
  return r;
}

double NicholsonSystem::min_delay() const {
  double r = std::numeric_limits<double>::infinity();
  for (const BirthTerm& bt : births1) r = std::min(r, extrema(bt.tau).inf);
  for (const BirthTerm& bt : births2) r = std::min(r, extrema(bt.tau).inf);
  return r;
}

double mortality(const MortalityTerm& m, double t, double x) {
  const double ct = m.c.eval(t);
  if (ct + x <= 0.0) {
    throw PoleError("mortality pole: c(t)+x = " + std::to_string(ct + x) + " at t = " +
                    std::to_string(t));
  }
  return m.delta.eval(t) * x / (ct + x);
}

State rhs(const NicholsonSystem& sys, double t, const State& x_now,
          std::span<const double> x1_delayed, std::span<const double> x2_delayed,
          double lambda) {
  double dx1 = -mortality(sys.m11, t, x_now[0]) + mortality(sys.m12, t, x_now[1]);
  for (std::size_t j = 0; j < sys.births1.size(); ++j) {
    dx1 += sys.births1[j].b.eval(t) * birth_f(x1_delayed[j]);
  }
  double dx2 = -mortality(sys.m22, t, x_now[1]) + mortality(sys.m21, t, x_now[0]);
  for (std::size_t j = 0; j < sys.births2.size(); ++j) {
    dx2 += sys.births2[j].b.eval(t) * birth_f(x2_delayed[j]);
  }
  return {lambda * dx1, lambda * dx2};
}

std::function<State(double)> phi(const NicholsonSystem& sys, std::function<State(double)> X) {
  return [sys, X = std::move(X)](double t) -> State {
    const State now = X(t);
    std::vector<double> d1(sys.births1.size()), d2(sys.births2.size());
    for (std::size_t j = 0; j < sys.births1.size(); ++j) {
      d1[j] = X(t - sys.births1[j].tau.eval(t))[0];
    }
    for (std::size_t j = 0; j < sys.births2.size(); ++j) {
      d2[j] = X(t - sys.births2[j].tau.eval(t))[1];
    }
    return rhs(sys, t, now, d1, d2, 1.0);
  };
}

}  // namespace nicholson
