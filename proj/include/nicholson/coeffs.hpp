#ifndef NICHOLSON_COEFFS_HPP
#define NICHOLSON_COEFFS_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace nicholson {

enum class Waveform { Sine, Cosine };

struct Harmonic {
  double amplitude = 0.0;
  int multiple = 1;  // angular frequency is 2*pi*multiple/period
  double phase = 0.0;
  Waveform waveform = Waveform::Sine;
};

/// A positive, bounded, omega-periodic coefficient given as an offset plus a
/// finite harmonic series. The mean over one period equals the offset, and
/// single-harmonic extrema are available in closed form, which is what the
/// hypothesis arithmetic needs.
class PeriodicCoefficient {
 public:
  PeriodicCoefficient(double offset, std::vector<Harmonic> harmonics, double period);

  static PeriodicCoefficient constant(double value, double period) {
    return PeriodicCoefficient(value, {}, period);
  }

  double eval(double t) const;
  double offset() const { return offset_; }
  double period() const { return period_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  /// Scale the whole function by a positive factor (offset and amplitudes).
  PeriodicCoefficient scaled(double factor) const;

 private:
  double offset_;
  std::vector<Harmonic> harmonics_;
  double period_;
};

struct Extrema {
  double inf = 0.0;
  double sup = 0.0;
  double arg_inf = 0.0;  // in [0, omega)
  double arg_sup = 0.0;
};

/// Min and max over one period. Closed form for zero or one harmonic,
/// 4096-point scan with golden-section refinement otherwise.
Extrema extrema(const PeriodicCoefficient& coef);

/// Composite trapezoidal integral of an omega-periodic sampler over [0, omega],
/// spectrally accurate for smooth periodic integrands. Requires n >= 8.
double period_integral(const std::function<double(double)>& f, double omega, std::size_t n);

/// Quadrature node count used throughout; NICHOLSON_QUAD_N overrides the
/// default of 256.
std::size_t default_quadrature_samples();

}  // namespace nicholson

#endif  // NICHOLSON_COEFFS_HPP
