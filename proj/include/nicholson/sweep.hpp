#ifndef NICHOLSON_SWEEP_HPP
#define NICHOLSON_SWEEP_HPP

#include <string>
#include <vector>

#include "nicholson/config.hpp"

namespace nicholson {

struct SweepAxis {
  std::string scalar;
  std::vector<double> values;

  static SweepAxis linspace(std::string scalar, double lo, double hi, int n);
};

struct SweepPoint {
  std::vector<double> values;  // one per axis, same order
  bool hypotheses_pass = false;
  bool chen_wang_pass = false;
  bool orbit_found = false;    // only meaningful when orbits were requested
  double orbit_residual = 0.0;
};

struct SweepOptions {
  bool find_orbits = false;
  std::size_t quad_n = 256;
};

/// Classify every grid point of the cartesian product of the axes. The
/// parallel version distributes points over OpenMP threads; the serial
/// version is the reference the parallel one is tested against.
std::vector<SweepPoint> run_sweep(const SystemConfig& cfg, const std::vector<SweepAxis>& axes,
                                  const SweepOptions& opts = {});
std::vector<SweepPoint> run_sweep_serial(const SystemConfig& cfg,
                                         const std::vector<SweepAxis>& axes,
                                         const SweepOptions& opts = {});

/// CSV table: one column per axis, then h_pass, cw_pass[, orbit_found].
std::string sweep_csv(const std::vector<SweepAxis>& axes, const std::vector<SweepPoint>& points,
                      bool with_orbits);

}  // namespace nicholson

#endif  // NICHOLSON_SWEEP_HPP
