#ifndef NICHOLSON_DEGREE_HPP
#define NICHOLSON_DEGREE_HPP

#include <functional>

#include "nicholson/bounds.hpp"
#include "nicholson/model.hpp"

namespace nicholson {

using PlanarMap = std::function<State(const State&)>;

/// Time-average of the autonomous field over one period, evaluated at constant
/// states; delayed arguments collapse to the state itself. Zeros of this map
/// inside the rectangle drive the degree argument.
class AveragedMap {
 public:
  AveragedMap(NicholsonSystem sys, std::size_t quadrature_samples);

  /// g(x) componentwise: (1/omega) * integral of (mortality_ii - b_i f(x_i)
  /// - mortality_ij) over one period. Throws PoleError if a denominator can
  /// reach zero at the given state.
  State operator()(const State& x) const;

  std::size_t samples() const { return n_; }
  const NicholsonSystem& system() const { return sys_; }

 private:
  NicholsonSystem sys_;
  std::size_t n_;
};

inline State eval_g(const AveragedMap& map, const State& x) { return map(x); }

/// Edge-sampled check of the sign pattern g1 < 0 / > 0 on the left/right edge
/// and g2 < 0 / > 0 on the bottom/top edge. A failed pattern is a negative
/// certificate, not an error.
struct MirandaCertificate {
  Rectangle rect;
  int samples_per_edge = 0;
  double min_abs_value_on_edges = 0.0;
  bool pattern_holds = false;
};

MirandaCertificate miranda_check(const PlanarMap& map, const Rectangle& rect,
                                 int samples_per_edge = 256);

/// Brouwer degree of a planar map on a rectangle as the winding number of the
/// boundary image around the origin. Angle increments are accumulated with
/// adaptive subdivision whenever a step turns by pi/2 or more. Throws
/// ZeroOnBoundary when the boundary image comes within a relative tolerance of
/// the origin, RefinementExceeded past 2^20 segments.
int brouwer_degree(const PlanarMap& map, const Rectangle& rect, int boundary_samples = 1024);

/// A zero of the map inside a rectangle carrying the Miranda sign pattern:
/// pattern-preserving rectangle bisection, then damped Newton with a
/// finite-difference Jacobian down to |g| < 1e-10. Throws NoConvergence at the
/// iteration cap.
State find_root_g(const PlanarMap& map, const Rectangle& rect);

}  // namespace nicholson

#endif  // NICHOLSON_DEGREE_HPP
