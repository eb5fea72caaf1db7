#include "nicholson/coeffs.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "nicholson/errors.hpp"

namespace nicholson {

PeriodicCoefficient::PeriodicCoefficient(double offset, std::vector<Harmonic> harmonics,
                                         double period)
    : offset_(offset), harmonics_(std::move(harmonics)), period_(period) {
  if (!(period > 0.0)) throw ConfigError("coefficient period must be positive");
  for (const Harmonic& h : harmonics_) {
    if (h.multiple < 1) throw ConfigError("harmonic multiple must be >= 1");
  }
}

double PeriodicCoefficient::eval(double t) const {
  double v = offset_;
  const double base = 2.0 * std::numbers::pi / period_;
  for (const Harmonic& h : harmonics_) {
    const double arg = base * h.multiple * t + h.phase;
    v += h.amplitude * (h.waveform == Waveform::Sine ? std::sin(arg) : std::cos(arg));
  }
  return v;
}

PeriodicCoefficient PeriodicCoefficient::scaled(double factor) const {
  std::vector<Harmonic> hs = harmonics_;
  for (Harmonic& h : hs) h.amplitude *= factor;
  return PeriodicCoefficient(offset_ * factor, std::move(hs), period_);
}

namespace {

// Golden-section refinement of a local extremum bracketed by [lo, hi].
// sign = +1 minimizes, -1 maximizes.
double golden_refine(const PeriodicCoefficient& coef, double lo, double hi, double sign,
                     double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = sign * coef.eval(c);
  double fd = sign * coef.eval(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = sign * coef.eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = sign * coef.eval(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Extrema extrema(const PeriodicCoefficient& coef) {
  const double omega = coef.period();
  const auto& hs = coef.harmonics();

  if (hs.empty()) {
    return Extrema{coef.offset(), coef.offset(), 0.0, 0.0};
  }
  if (hs.size() == 1) {
    // offset + a*w(2*pi*k*t/omega + phase): sup = offset + |a|, inf = offset - |a|.
    const Harmonic& h = hs[0];
    const double a = std::abs(h.amplitude);
    const double base = 2.0 * std::numbers::pi * h.multiple / omega;
    // arg of the waveform at its +1 (resp. -1) value, mapped back to t in [0, omega).
    const double peak_arg = (h.waveform == Waveform::Sine) ? std::numbers::pi / 2.0 : 0.0;
    const double flip = (h.amplitude >= 0.0) ? 0.0 : std::numbers::pi;
    auto t_of_arg = [&](double arg) {
      double t = (arg - h.phase) / base;
      t = std::fmod(t, omega / h.multiple);
      if (t < 0.0) t += omega / h.multiple;
      return t;
    };
    return Extrema{coef.offset() - a, coef.offset() + a,
                   t_of_arg(peak_arg + std::numbers::pi + flip), t_of_arg(peak_arg + flip)};
  }

  // Multi-harmonic: uniform scan, then golden-section around the best samples.
  constexpr std::size_t kScan = 4096;
  constexpr double kTol = 1e-12;
  double best_min = coef.eval(0.0), best_max = best_min;
  std::size_t i_min = 0, i_max = 0;
  for (std::size_t i = 1; i < kScan; ++i) {
    const double v = coef.eval(omega * static_cast<double>(i) / kScan);
    if (v < best_min) {
      best_min = v;
      i_min = i;
    }
    if (v > best_max) {
      best_max = v;
      i_max = i;
    }
  }
  const double dt = omega / kScan;
  const double t_min = golden_refine(coef, (static_cast<double>(i_min) - 1.0) * dt,
                                     (static_cast<double>(i_min) + 1.0) * dt, +1.0, kTol);
  const double t_max = golden_refine(coef, (static_cast<double>(i_max) - 1.0) * dt,
                                     (static_cast<double>(i_max) + 1.0) * dt, -1.0, kTol);
  Extrema ex;
  ex.inf = std::min(coef.eval(t_min), best_min);
  ex.sup = std::max(coef.eval(t_max), best_max);
  ex.arg_inf = std::fmod(t_min + omega, omega);
  ex.arg_sup = std::fmod(t_max + omega, omega);
  return ex;
}

double period_integral(const std::function<double(double)>& f, double omega, std::size_t n) {
  if (n < 8) throw std::invalid_argument("period_integral requires n >= 8");
  // For an omega-periodic integrand the composite trapezoid collapses to the
  // endpoint-free rectangle sum.
  double acc = 0.0;
  const double h = omega / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) acc += f(h * static_cast<double>(i));
  return acc * h;
}

std::size_t default_quadrature_samples() {
  if (const char* env = std::getenv("NICHOLSON_QUAD_N")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 8) return static_cast<std::size_t>(v);
  }
  return 256;
}

}  // namespace nicholson
