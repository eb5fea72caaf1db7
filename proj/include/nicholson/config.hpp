#ifndef NICHOLSON_CONFIG_HPP
#define NICHOLSON_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nicholson/model.hpp"

namespace nicholson {

struct CoefficientSpec {
  double offset = 0.0;
  std::vector<Harmonic> harmonics;

  PeriodicCoefficient build(double omega) const {
    return PeriodicCoefficient(offset, harmonics, omega);
  }
};

struct BirthSpec {
  CoefficientSpec b;
  CoefficientSpec tau;
  std::string scalar;  // empty: no scalar multiplies this birth rate
};

struct SimulationSpec {
  State history = {1.0, 1.0};
  int steps_per_period = 1024;
  int periods = 20;
  double residual_tol = 1e-4;
  double defect_tol = 1e-2;
};

/// Parsed system description. Declared-positive coefficients are verified
/// positive at load time; scalars are named multipliers attached to birth
/// rates (one patch per scalar).
class SystemConfig {
 public:
  static SystemConfig from_json(const nlohmann::json& j);
  static SystemConfig load(const std::string& path);
  nlohmann::json to_json() const;

  /// System with all scalar values applied.
  NicholsonSystem build() const;
  /// Same, with some scalar values replaced.
  NicholsonSystem build_with(const std::map<std::string, double>& overrides) const;
  /// System with the named scalar forced to 1 (others applied), for solving
  /// the admissible interval.
  NicholsonSystem build_unit_scalar(const std::string& name) const;

  /// 0-based patch the scalar's birth terms live in. Throws ConfigError for
  /// unknown scalars or scalars spanning both patches.
  int scalar_patch(const std::string& name) const;

  double omega = 0.0;
  CoefficientSpec delta11, c11, delta12, c12, delta21, c21, delta22, c22;
  std::vector<BirthSpec> births1, births2;
  std::map<std::string, double> scalars;
  SimulationSpec simulation;
};

}  // namespace nicholson

#endif  // NICHOLSON_CONFIG_HPP
