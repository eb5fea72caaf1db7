#ifndef NICHOLSON_TESTS_FIXTURES_HPP
#define NICHOLSON_TESTS_FIXTURES_HPP

#include <numbers>
#include <string>

#include "nicholson/config.hpp"
#include "nicholson/model.hpp"

namespace nicholson::testing {

#ifndef NICHOLSON_CONFIG_DIR
#error "NICHOLSON_CONFIG_DIR must be defined by the build"
#endif

inline std::string eq16_config_path() {
  return std::string(NICHOLSON_CONFIG_DIR) + "/eq16.json";
}

inline SystemConfig eq16_config() { return SystemConfig::load(eq16_config_path()); }

/// The shipped example system with given scalar values.
inline NicholsonSystem eq16(double alpha, double beta) {
  return eq16_config().build_with({{"alpha", alpha}, {"beta", beta}});
}

/// Symmetric constant-coefficient system: delta_ii = 5, c_ii = 4,
/// delta_ij = 2, c_ij = 2, b = 2, tau = delay, omega = 2*pi. Its positive
/// equilibrium solves 5u/(4+u) - 2u e^{-u} - 2u/(2+u) = 0.
inline NicholsonSystem symmetric_constant(double delay = 0.5) {
  const double omega = 2.0 * std::numbers::pi;
  auto k = [omega](double v) { return PeriodicCoefficient::constant(v, omega); };
  NicholsonSystem sys{MortalityTerm{k(5.0), k(4.0)}, MortalityTerm{k(2.0), k(2.0)},
                      MortalityTerm{k(2.0), k(2.0)}, MortalityTerm{k(5.0), k(4.0)},
                      {},
                      {},
                      omega};
  sys.births1.push_back(BirthTerm{k(2.0), k(delay)});
  sys.births2.push_back(BirthTerm{k(2.0), k(delay)});
  return sys;
}

}  // namespace nicholson::testing

#endif  // NICHOLSON_TESTS_FIXTURES_HPP
