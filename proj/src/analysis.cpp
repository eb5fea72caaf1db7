#include "nicholson/analysis.hpp"

#include <cmath>
#include <numbers>

#include "nicholson/errors.hpp"

namespace nicholson {

ConditionResult ConditionResult::make(std::string name, double lhs, double rhs) {
  ConditionResult r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.pass = r.margin > 0.0;
  r.marginal = std::abs(r.margin) < kMarginalTol;
  return r;
}

namespace {

struct PatchExtrema {
  double b_sup_sum = 0.0;
  double b_inf_sum = 0.0;
};

PatchExtrema birth_extrema(const std::vector<BirthTerm>& births) {
  PatchExtrema p;
  for (const BirthTerm& bt : births) {
    const Extrema e = extrema(bt.b);
    p.b_sup_sum += e.sup;
    p.b_inf_sum += e.inf;
  }
  return p;
}

}  // namespace

HypothesisReport check_hypotheses(const NicholsonSystem& sys) {
  const double e = std::numbers::e;
  const PatchExtrema b1 = birth_extrema(sys.births1);
  const PatchExtrema b2 = birth_extrema(sys.births2);
  const Extrema d11 = extrema(sys.m11.delta), c11 = extrema(sys.m11.c);
  const Extrema d12 = extrema(sys.m12.delta), c12 = extrema(sys.m12.c);
  const Extrema d21 = extrema(sys.m21.delta), c21 = extrema(sys.m21.c);
  const Extrema d22 = extrema(sys.m22.delta), c22 = extrema(sys.m22.c);

  HypothesisReport rep;
  rep.h1 = ConditionResult::make("H1", b1.b_sup_sum / e + d12.sup, d11.inf);
  rep.h2 = ConditionResult::make("H2", b2.b_sup_sum / e + d21.sup, d22.inf);
  rep.h3 = ConditionResult::make("H3", d11.sup / c11.inf - d12.inf / c12.sup, b1.b_inf_sum);
  rep.h4 = ConditionResult::make("H4", d22.sup / c22.inf - d21.inf / c21.sup, b2.b_inf_sum);
  rep.all_pass = rep.h1.pass && rep.h2.pass && rep.h3.pass && rep.h4.pass;
  return rep;
}

ChenWangReport check_chen_wang(const NicholsonSystem& sys, std::size_t quad_n) {
  if (sys.births1.size() != 1 || sys.births2.size() != 1) {
    throw ConfigError("Chen-Wang comparison requires one birth term per patch");
  }
  const double omega = sys.omega;
  const double e = std::numbers::e;
  auto integ = [&](auto&& f) { return period_integral(f, omega, quad_n); };

  ChenWangReport r;
  r.A1 = 2.0 * integ([&](double t) { return sys.m11.delta.eval(t) / sys.m11.c.eval(t); });
  r.A2 = 2.0 * integ([&](double t) { return sys.m22.delta.eval(t) / sys.m22.c.eval(t); });
  r.B1 = integ([&](double t) { return sys.births1[0].b.eval(t); });
  r.B2 = integ([&](double t) { return sys.births2[0].b.eval(t); });
  r.C1 = integ([&](double t) { return sys.m11.delta.eval(t); });
  r.C2 = integ([&](double t) { return sys.m22.delta.eval(t); });
  r.D1 = integ([&](double t) { return sys.m12.delta.eval(t); });
  r.D2 = integ([&](double t) { return sys.m21.delta.eval(t); });

  const Extrema d11 = extrema(sys.m11.delta), d22 = extrema(sys.m22.delta);
  const Extrema d12 = extrema(sys.m12.delta), d21 = extrema(sys.m21.delta);
  const double b1_sup = extrema(sys.births1[0].b).sup;
  const double b2_sup = extrema(sys.births2[0].b).sup;

  r.smallness1 =
      ConditionResult::make("CW-smallness-1", b1_sup / (d11.inf * e) + d12.sup / d11.inf, 1.0);
  r.smallness2 =
      ConditionResult::make("CW-smallness-2", b2_sup / (d22.inf * e) + d21.sup / d22.inf, 1.0);
  r.c_vs_d_1 = ConditionResult::make("CW-C1>2D1", 2.0 * r.D1, r.C1);
  r.c_vs_d_2 = ConditionResult::make("CW-C2>2D2", 2.0 * r.D2, r.C2);
  r.log_1 = ConditionResult::make("CW-log-1", r.A1, std::log(2.0 * r.B1 / r.A1));
  r.log_2 = ConditionResult::make("CW-log-2", r.A2, std::log(2.0 * r.B2 / r.A2));
  r.all_pass = r.smallness1.pass && r.smallness2.pass && r.c_vs_d_1.pass && r.c_vs_d_2.pass &&
               r.log_1.pass && r.log_2.pass;
  return r;
}

Interval admissible_parameter_interval(const NicholsonSystem& sys, int patch) {
  if (patch != 0 && patch != 1) throw ConfigError("patch index must be 0 or 1");
  const double e = std::numbers::e;
  const bool first = patch == 0;
  const PatchExtrema b = birth_extrema(first ? sys.births1 : sys.births2);
  const Extrema dii = extrema(first ? sys.m11.delta : sys.m22.delta);
  const Extrema cii = extrema(first ? sys.m11.c : sys.m22.c);
  const Extrema dij = extrema(first ? sys.m12.delta : sys.m21.delta);
  const Extrema cij = extrema(first ? sys.m12.c : sys.m21.c);

  // (H1)/(H2): s * b_sup/e + dij_sup < dii_inf, linear increasing in s.
  const double hi = e * (dii.inf - dij.sup) / b.b_sup_sum;
  // (H3)/(H4): dii_sup/cii_inf - dij_inf/cij_sup < s * b_inf.
  const double mixed = dii.sup / cii.inf - dij.inf / cij.sup;
  const double lo = std::max(0.0, mixed / b.b_inf_sum);

  if (!(lo < hi)) {
    throw EmptyInterval("no positive scalar satisfies the patch hypotheses (lo = " +
                        std::to_string(lo) + ", hi = " + std::to_string(hi) + ")");
  }
  return Interval{lo, hi};
}

}  // namespace nicholson
