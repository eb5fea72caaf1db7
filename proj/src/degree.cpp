#include "nicholson/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nicholson/errors.hpp"

namespace nicholson {

AveragedMap::AveragedMap(NicholsonSystem sys, std::size_t quadrature_samples)
    : sys_(std::move(sys)), n_(quadrature_samples) {}

State AveragedMap::operator()(const State& x) const {
  for (const MortalityTerm* m : {&sys_.m11, &sys_.m12, &sys_.m21, &sys_.m22}) {
    const double xi = (m == &sys_.m11 || m == &sys_.m21) ? x[0] : x[1];
    if (extrema(m->c).inf + xi <= 0.0) {
      throw PoleError("averaged map pole at x = (" + std::to_string(x[0]) + ", " +
                      std::to_string(x[1]) + ")");
    }
  }
  const double omega = sys_.omega;
  auto g1_integrand = [&](double t) {
    double v = sys_.m11.delta.eval(t) * x[0] / (sys_.m11.c.eval(t) + x[0]) -
               sys_.m12.delta.eval(t) * x[1] / (sys_.m12.c.eval(t) + x[1]);
    for (const BirthTerm& bt : sys_.births1) v -= bt.b.eval(t) * birth_f(x[0]);
    return v;
  };
  auto g2_integrand = [&](double t) {
    double v = sys_.m22.delta.eval(t) * x[1] / (sys_.m22.c.eval(t) + x[1]) -
               sys_.m21.delta.eval(t) * x[0] / (sys_.m21.c.eval(t) + x[0]);
    for (const BirthTerm& bt : sys_.births2) v -= bt.b.eval(t) * birth_f(x[1]);
    return v;
  };
  return {period_integral(g1_integrand, omega, n_) / omega,
          period_integral(g2_integrand, omega, n_) / omega};
}

MirandaCertificate miranda_check(const PlanarMap& map, const Rectangle& rect,
                                 int samples_per_edge) {
  MirandaCertificate cert;
  cert.rect = rect;
  cert.samples_per_edge = samples_per_edge;
  cert.pattern_holds = true;
  cert.min_abs_value_on_edges = std::numeric_limits<double>::infinity();

  const double lo = rect.lo, hi = rect.hi;
  auto record = [&](double component, bool want_negative) {
    cert.min_abs_value_on_edges = std::min(cert.min_abs_value_on_edges, std::abs(component));
    if (want_negative ? !(component < 0.0) : !(component > 0.0)) cert.pattern_holds = false;
  };
  for (int i = 0; i < samples_per_edge; ++i) {
    const double s = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(samples_per_edge - 1);
    record(map({lo, s})[0], true);    // left edge: g1 < 0
    record(map({hi, s})[0], false);   // right edge: g1 > 0
    record(map({s, lo})[1], true);    // bottom edge: g2 < 0
    record(map({s, hi})[1], false);   // top edge: g2 > 0
  }
  return cert;
}

namespace {

// Positively oriented boundary point at parameter s in [0,4).
State boundary_point(const Rectangle& r, double s) {
  const double w = r.hi - r.lo;
  if (s < 1.0) return {r.lo + w * s, r.lo};
  if (s < 2.0) return {r.hi, r.lo + w * (s - 1.0)};
  if (s < 3.0) return {r.hi - w * (s - 2.0), r.hi};
  return {r.lo, r.hi - w * (s - 3.0)};
}

double signed_turn(const State& a, const State& b) {
  return std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
}

struct WindingWalk {
  const PlanarMap& map;
  const Rectangle& rect;
  double zero_tol;  // absolute, derived from the boundary image scale
  long segments = 0;
  static constexpr long kSegmentCap = 1L << 20;

  State sample(double s) const {
    const State v = map(boundary_point(rect, s));
    if (std::hypot(v[0], v[1]) < zero_tol) {
      throw ZeroOnBoundary("|map| below tolerance on boundary at parameter " +
                           std::to_string(s));
    }
    return v;
  }

  double accumulate(double s0, const State& v0, double s1, const State& v1) {
    const double turn = signed_turn(v0, v1);
    if (std::abs(turn) < std::numbers::pi / 2.0) {
      ++segments;
      return turn;
    }
    if (++segments > kSegmentCap) {
      throw RefinementExceeded("boundary subdivision exceeded 2^20 segments");
    }
    const double sm = 0.5 * (s0 + s1);
    const State vm = sample(sm);
    return accumulate(s0, v0, sm, vm) + accumulate(sm, vm, s1, v1);
  }
};

}  // namespace

int brouwer_degree(const PlanarMap& map, const Rectangle& rect, int boundary_samples) {
  boundary_samples = std::max(boundary_samples, 16);

  // Zero guard: the winding number is invariant under positive scaling of the
  // map, and near the rectangle corners the image magnitude can be orders of
  // magnitude below the edge maxima while the direction stays well resolved.
  // Only an exact or subnormal zero makes the angle undefined.
  const double zero_tol = std::numeric_limits<double>::min();

  std::vector<double> params(static_cast<std::size_t>(boundary_samples));
  std::vector<State> values(params.size());
  WindingWalk walk{map, rect, zero_tol};
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] = 4.0 * static_cast<double>(i) / static_cast<double>(params.size());
    values[i] = walk.sample(params[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::size_t j = (i + 1) % params.size();
    const double s1 = (j == 0) ? 4.0 : params[j];
    total += walk.accumulate(params[i], values[i], s1, values[j]);
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

namespace {

constexpr int kSegmentSamples = 33;

// Sign of `component` of the map along the axis-aligned segment; +1/-1 when
// uniform, 0 when mixed.
int segment_sign(const PlanarMap& map, int component, bool vertical, double fixed,
                 double lo, double hi) {
  int sign = 0;
  for (int i = 0; i < kSegmentSamples; ++i) {
    const double s = lo + (hi - lo) * static_cast<double>(i) / (kSegmentSamples - 1);
    const State v = vertical ? map({fixed, s}) : map({s, fixed});
    const int si = (v[static_cast<std::size_t>(component)] > 0.0) ? 1 : -1;
    if (sign == 0) {
      sign = si;
    } else if (sign != si) {
      return 0;
    }
  }
  return sign;
}

bool pattern_on(const PlanarMap& map, double a1, double b1, double a2, double b2) {
  return segment_sign(map, 0, true, a1, a2, b2) == -1 &&
         segment_sign(map, 0, true, b1, a2, b2) == +1 &&
         segment_sign(map, 1, false, a2, a1, b1) == -1 &&
         segment_sign(map, 1, false, b2, a1, b1) == +1;
}

State newton_polish(const PlanarMap& map, State x, double a1, double b1, double a2, double b2) {
  auto clamp_into = [&](State p) {
    p[0] = std::clamp(p[0], a1 + 1e-14 * (b1 - a1), b1 - 1e-14 * (b1 - a1));
    p[1] = std::clamp(p[1], a2 + 1e-14 * (b2 - a2), b2 - 1e-14 * (b2 - a2));
    return p;
  };
  auto norm = [](const State& v) { return std::max(std::abs(v[0]), std::abs(v[1])); };

  State g = map(x);
  for (int it = 0; it < 100; ++it) {
    if (norm(g) < 1e-10) return x;
    // Central-difference Jacobian.
    double J[2][2];
    for (int col = 0; col < 2; ++col) {
      const double step = 1e-7 * std::max(1.0, std::abs(x[static_cast<std::size_t>(col)]));
      State xp = x, xm = x;
      xp[static_cast<std::size_t>(col)] += step;
      xm[static_cast<std::size_t>(col)] -= step;
      const State gp = map(clamp_into(xp)), gm = map(clamp_into(xm));
      J[0][col] = (gp[0] - gm[0]) / (2.0 * step);
      J[1][col] = (gp[1] - gm[1]) / (2.0 * step);
    }
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0) break;
    const State step = {(J[1][1] * g[0] - J[0][1] * g[1]) / det,
                        (J[0][0] * g[1] - J[1][0] * g[0]) / det};
    double damp = 1.0;
    State next = x;
    State g_next = g;
    while (damp > 1e-8) {
      next = clamp_into({x[0] - damp * step[0], x[1] - damp * step[1]});
      g_next = map(next);
      if (norm(g_next) < norm(g)) break;
      damp *= 0.5;
    }
    if (!(norm(g_next) < norm(g))) break;
    x = next;
    g = g_next;
  }
  if (norm(g) < 1e-10) return x;
  throw NoConvergence("root polish stalled at |g| = " + std::to_string(norm(g)));
}

}  // namespace

State find_root_g(const PlanarMap& map, const Rectangle& rect) {
  double a1 = rect.lo, b1 = rect.hi, a2 = rect.lo, b2 = rect.hi;

  for (int it = 0; it < 600; ++it) {
    if (std::max(b1 - a1, b2 - a2) < 1e-2) break;
    const bool split_x1 = (b1 - a1) >= (b2 - a2);
    bool progressed = false;
    if (split_x1) {
      const double mid = 0.5 * (a1 + b1);
      const int s = segment_sign(map, 0, true, mid, a2, b2);
      if (s == +1) {
        b1 = mid;
        progressed = true;
      } else if (s == -1) {
        a1 = mid;
        progressed = true;
      }
    } else {
      const double mid = 0.5 * (a2 + b2);
      const int s = segment_sign(map, 1, false, mid, a1, b1);
      if (s == +1) {
        b2 = mid;
        progressed = true;
      } else if (s == -1) {
        a2 = mid;
        progressed = true;
      }
    }
    if (!progressed) {
      // Mixed sign on the splitting segment: look for a quadrant that still
      // carries the full pattern, otherwise hand off to Newton.
      const double m1 = 0.5 * (a1 + b1), m2 = 0.5 * (a2 + b2);
      bool found = false;
      const double q[4][4] = {{a1, m1, a2, m2}, {m1, b1, a2, m2}, {a1, m1, m2, b2},
                              {m1, b1, m2, b2}};
      for (const auto& r : q) {
        if (pattern_on(map, r[0], r[1], r[2], r[3])) {
          a1 = r[0];
          b1 = r[1];
          a2 = r[2];
          b2 = r[3];
          found = true;
          break;
        }
      }
      if (!found) break;
    }
  }
  return newton_polish(map, {0.5 * (a1 + b1), 0.5 * (a2 + b2)}, rect.lo, rect.hi, rect.lo,
                       rect.hi);
}

}  // namespace nicholson
