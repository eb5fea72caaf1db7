#include "nicholson/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nicholson/analysis.hpp"
#include "nicholson/errors.hpp"

namespace nicholson {

namespace {
constexpr double kMarginUp = 1e-3;   // relative enlargement of r0
constexpr double kSafety = 0.5;      // eps0 = kSafety * min(eps*, r1)
constexpr std::size_t kScanPoints = 10000;
}  // namespace

double upper_threshold(double delta_ii_inf, double c_ii_sup, double b_sup_sum,
                       double delta_ij_sup) {
  const double k = b_sup_sum / std::numbers::e + delta_ij_sup;
  if (k >= delta_ii_inf) {
    throw HypothesisViolated("no finite upper bound: b_sup/e + delta_ij_sup = " +
                             std::to_string(k) + " >= delta_ii_inf = " +
                             std::to_string(delta_ii_inf));
  }
  return c_ii_sup * k / (delta_ii_inf - k);
}

double conjugate_r1(double r0) {
  if (r0 < 1.0) throw std::invalid_argument("conjugate_r1 requires r0 >= 1");
  if (r0 == 1.0) return 1.0;
  const double level = birth_f(r0);
  // f is strictly increasing on (0,1]; bracket then safeguarded Newton.
  // Plain bisection stalls in relative terms when the level is tiny (large
  // r0), so Newton steps carry the convergence once the bracket is decent.
  double lo = 0.0, hi = 1.0;
  double x = std::min(1.0, level * std::numbers::e);  // f(x) ~ x near 0
  for (int it = 0; it < 200; ++it) {
    const double fx = birth_f(x) - level;
    if (fx > 0.0) {
      hi = x;
    } else if (fx < 0.0) {
      lo = x;
    } else {
      return x;
    }
    const double dfx = (1.0 - x) * std::exp(-x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * x) return next;
    x = next;
  }
  return x;
}

double lower_threshold(double delta_ii_sup, double c_ii_inf, double delta_ij_inf,
                       double c_ij_sup, double b_inf_sum, double r1) {
  auto gap = [&](double eps) {
    return delta_ii_sup / (c_ii_inf + eps) - delta_ij_inf / (c_ij_sup + eps) -
           b_inf_sum * std::exp(-eps);
  };
  if (gap(0.0) >= 0.0) {
    throw HypothesisViolated("lower bound hypothesis fails at eps = 0 (gap = " +
                             std::to_string(gap(0.0)) + ")");
  }
  // Sign scan over (0, r1], then bisection on the first bracket.
  double prev_eps = 0.0;
  for (std::size_t i = 1; i <= kScanPoints; ++i) {
    const double eps = r1 * static_cast<double>(i) / static_cast<double>(kScanPoints);
    if (gap(eps) >= 0.0) {
      double lo = prev_eps, hi = eps;
      while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_eps = eps;
  }
  return r1;  // no crossing: any eps below r1 works
}

BoundsReport build_rectangle(const NicholsonSystem& sys) {
  const HypothesisReport hyp = check_hypotheses(sys);
  if (!hyp.all_pass) {
    std::string failed;
    for (const ConditionResult* c : {&hyp.h1, &hyp.h2, &hyp.h3, &hyp.h4}) {
      if (!c->pass) failed += (failed.empty() ? "" : ", ") + c->name;
    }
    throw HypothesisViolated("cannot build rectangle, failing: " + failed);
  }

  double b1_sup = 0.0, b1_inf = 0.0, b2_sup = 0.0, b2_inf = 0.0;
  for (const BirthTerm& bt : sys.births1) {
    const Extrema e = extrema(bt.b);
    b1_sup += e.sup;
    b1_inf += e.inf;
  }
  for (const BirthTerm& bt : sys.births2) {
    const Extrema e = extrema(bt.b);
    b2_sup += e.sup;
    b2_inf += e.inf;
  }
  const Extrema d11 = extrema(sys.m11.delta), c11 = extrema(sys.m11.c);
  const Extrema d12 = extrema(sys.m12.delta), c12 = extrema(sys.m12.c);
  const Extrema d21 = extrema(sys.m21.delta), c21 = extrema(sys.m21.c);
  const Extrema d22 = extrema(sys.m22.delta), c22 = extrema(sys.m22.c);

  BoundsReport rep;
  rep.r0_patch1 = upper_threshold(d11.inf, c11.sup, b1_sup, d12.sup);
  rep.r0_patch2 = upper_threshold(d22.inf, c22.sup, b2_sup, d21.sup);
  rep.r0 = std::max(1.0, std::max(rep.r0_patch1, rep.r0_patch2)) * (1.0 + kMarginUp);
  rep.r1 = conjugate_r1(rep.r0);
  rep.eps_star_patch1 = lower_threshold(d11.sup, c11.inf, d12.inf, c12.sup, b1_inf, rep.r1);
  rep.eps_star_patch2 = lower_threshold(d22.sup, c22.inf, d21.inf, c21.sup, b2_inf, rep.r1);
  rep.eps0 = kSafety * std::min({rep.eps_star_patch1, rep.eps_star_patch2, rep.r1});
  rep.rect = Rectangle{rep.eps0, rep.r0};
  return rep;
}

}  // namespace nicholson
