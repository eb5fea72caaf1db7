#ifndef NICHOLSON_MODEL_HPP
#define NICHOLSON_MODEL_HPP

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "nicholson/coeffs.hpp"

namespace nicholson {

using State = std::array<double, 2>;

/// Saturating mortality delta(t)*x/(c(t)+x), bounded above by delta(t).
struct MortalityTerm {
  PeriodicCoefficient delta;
  PeriodicCoefficient c;
};

/// Delayed Nicholson recruitment b(t)*f(x(t - tau(t))).
struct BirthTerm {
  PeriodicCoefficient b;
  PeriodicCoefficient tau;
};

/// Two-patch Nicholson-type system with density-dependent mortality.
/// births1/births2 of length 1 give the basic system; longer lists give the
/// multi-delay variant with summed recruitment.
struct NicholsonSystem {
  MortalityTerm m11, m12, m21, m22;
  std::vector<BirthTerm> births1, births2;
  double omega = 0.0;

  double max_delay() const;
  double min_delay() const;
};

/// Nicholson birth nonlinearity x*exp(-x); maximum 1/e at x = 1.
inline double birth_f(double x) { return x * std::exp(-x); }

/// delta(t)*x/(c(t)+x). Throws PoleError when c(t)+x <= 0.
double mortality(const MortalityTerm& m, double t, double x);

/// Right-hand side of the lambda-parameterized system at a given state and
/// per-patch delayed densities (one per BirthTerm). lambda = 1 is the target
/// system.
State rhs(const NicholsonSystem& sys, double t, const State& x_now,
          std::span<const double> x1_delayed, std::span<const double> x2_delayed,
          double lambda = 1.0);

/// Pointwise evaluation of the operator Phi on an omega-periodic function
/// pair; delayed arguments are read from the pair itself.
std::function<State(double)> phi(const NicholsonSystem& sys,
                                 std::function<State(double)> X);

}  // namespace nicholson

#endif  // NICHOLSON_MODEL_HPP
