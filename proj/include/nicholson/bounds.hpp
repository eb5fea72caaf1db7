#ifndef NICHOLSON_BOUNDS_HPP
#define NICHOLSON_BOUNDS_HPP

#include "nicholson/model.hpp"

namespace nicholson {

struct Rectangle {
  double lo = 0.0;
  double hi = 0.0;
};

/// The constructive constants of the a priori bound argument: per-patch upper
/// thresholds, their max R0 (floored at 1), the conjugate level R1 in (0,1]
/// with f(R1) = f(R0), per-patch lower crossings, the safe lower bound eps0,
/// and the resulting rectangle.
struct BoundsReport {
  double r0_patch1 = 0.0;
  double r0_patch2 = 0.0;
  double r0 = 0.0;
  double r1 = 0.0;
  double eps_star_patch1 = 0.0;
  double eps_star_patch2 = 0.0;
  double eps0 = 0.0;
  Rectangle rect;
};

/// Unique R with delta_ii_inf * R / (c_ii_sup + R) = b_sup_sum/e + delta_ij_sup.
/// Any periodic solution's patch maximum lies below every R' above this value.
/// Throws HypothesisViolated when the right side reaches delta_ii_inf.
double upper_threshold(double delta_ii_inf, double c_ii_sup, double b_sup_sum,
                       double delta_ij_sup);

/// Unique r1 in (0,1] with r1*exp(-r1) = r0*exp(-r0), for r0 >= 1. Safeguarded
/// Newton on the increasing branch; relative accuracy near machine precision
/// even for tiny levels.
double conjugate_r1(double r0);

/// Smallest eps in (0, r1] where delta_ii_sup/(c_ii_inf+eps) -
/// delta_ij_inf/(c_ij_sup+eps) meets b_inf_sum*exp(-eps), or r1 when the left
/// side stays below on the whole interval. Throws HypothesisViolated when the
/// eps = 0 value already fails (H3)/(H4).
double lower_threshold(double delta_ii_sup, double c_ii_inf, double delta_ij_inf,
                       double c_ij_sup, double b_inf_sum, double r1);

/// Assemble the full report: both patch thresholds, r0 = max(1, thresholds)
/// enlarged by a relative margin, r1, both lower crossings, eps0 = half their
/// minimum, and the rectangle (eps0, r0). Requires (H1)-(H4).
BoundsReport build_rectangle(const NicholsonSystem& sys);

}  // namespace nicholson

#endif  // NICHOLSON_BOUNDS_HPP
