#ifndef NICHOLSON_ERRORS_HPP
#define NICHOLSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nicholson {

// State left the model's domain: a mortality denominator c(t)+x hit zero or below.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// One of (H1)-(H4) fails, so the constructive bound does not exist.
struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

// No admissible parameter value satisfies all four hypotheses.
struct EmptyInterval : std::runtime_error {
  explicit EmptyInterval(const std::string& what) : std::runtime_error(what) {}
};

// The map vanishes (to tolerance) on the rectangle boundary; the degree is undefined there.
struct ZeroOnBoundary : std::runtime_error {
  explicit ZeroOnBoundary(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive boundary subdivision exceeded its segment cap.
struct RefinementExceeded : std::runtime_error {
  explicit RefinementExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Root polishing did not reach the residual tolerance.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Integration produced NaN/Inf state.
struct NonFiniteState : std::runtime_error {
  explicit NonFiniteState(const std::string& what) : std::runtime_error(what) {}
};

// Interpolation query outside the stored range.
struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

// Forward simulation did not settle onto a periodic orbit.
struct NotConverged : std::runtime_error {
  NotConverged(int periods, double residual, const std::string& what)
      : std::runtime_error(what), periods(periods), last_residual(residual) {}
  int periods;
  double last_residual;
};

// Malformed system description.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nicholson

#endif  // NICHOLSON_ERRORS_HPP
