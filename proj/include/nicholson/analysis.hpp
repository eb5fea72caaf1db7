#ifndef NICHOLSON_ANALYSIS_HPP
#define NICHOLSON_ANALYSIS_HPP

#include <string>

#include "nicholson/model.hpp"

namespace nicholson {

/// One strict inequality lhs < rhs. |margin| below kMarginalTol is flagged
/// marginal: the bound construction degenerates at equality, so callers should
/// refuse near-equal conditions even when they technically pass.
struct ConditionResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;    // margin > 0, strict
  bool marginal = false;

  static constexpr double kMarginalTol = 1e-9;
  static ConditionResult make(std::string name, double lhs, double rhs);
};

struct HypothesisReport {
  ConditionResult h1, h2, h3, h4;
  bool all_pass = false;
};

struct ChenWangReport {
  double A1 = 0, A2 = 0, B1 = 0, B2 = 0, C1 = 0, C2 = 0, D1 = 0, D2 = 0;
  ConditionResult smallness1, smallness2, c_vs_d_1, c_vs_d_2, log_1, log_2;
  bool all_pass = false;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Evaluate (H1)-(H4) from coefficient extrema. Birth suprema/infima are
/// summed over the patch's birth list, which reduces to the plain conditions
/// for single-delay systems.
HypothesisReport check_hypotheses(const NicholsonSystem& sys);

/// The competing Chen-Wang conditions: per-patch smallness, C_i > 2 D_i, and
/// ln(2 B_i / A_i) > A_i, with all eight period integrals reported.
/// Restricted to one birth term per patch.
ChenWangReport check_chen_wang(const NicholsonSystem& sys, std::size_t quad_n);

/// Admissible range for a scalar s multiplying the whole birth family of one
/// patch (0-based). `sys` must carry the unscaled (s = 1) coefficients. Solves
/// the two hypotheses that are linear in s and intersects the half-lines.
/// Throws EmptyInterval when no s > 0 satisfies both.
Interval admissible_parameter_interval(const NicholsonSystem& sys, int patch);

}  // namespace nicholson

#endif  // NICHOLSON_ANALYSIS_HPP
