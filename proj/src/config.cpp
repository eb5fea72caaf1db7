#include "nicholson/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "nicholson/errors.hpp"

namespace nicholson {

namespace {

using nlohmann::json;

double parse_omega(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    // "pi", "2pi", "0.5pi"
    std::string s = j.get<std::string>();
    const auto pos = s.find("pi");
    if (pos == std::string::npos || pos + 2 != s.size()) {
      throw ConfigError("cannot parse omega string '" + s + "'");
    }
    const std::string head = s.substr(0, pos);
    const double factor = head.empty() ? 1.0 : std::stod(head);
    return factor * std::numbers::pi;
  }
  throw ConfigError("omega must be a number or a '<x>pi' string");
}

CoefficientSpec parse_coef(const json& j, const std::string& what) {
  CoefficientSpec c;
  if (j.is_number()) {
    c.offset = j.get<double>();
    return c;
  }
  if (!j.is_object() || !j.contains("offset")) {
    throw ConfigError(what + ": coefficient must be a number or {offset, harmonics}");
  }
  c.offset = j.at("offset").get<double>();
  for (const json& hj : j.value("harmonics", json::array())) {
    Harmonic h;
    h.amplitude = hj.at("amp").get<double>();
    h.multiple = hj.value("k", 1);
    h.phase = hj.value("phase", 0.0);
    const std::string w = hj.value("waveform", "sin");
    if (w == "sin") {
      h.waveform = Waveform::Sine;
    } else if (w == "cos") {
      h.waveform = Waveform::Cosine;
    } else {
      throw ConfigError(what + ": waveform must be 'sin' or 'cos'");
    }
    c.harmonics.push_back(h);
  }
  return c;
}

json coef_json(const CoefficientSpec& c) {
  json j;
  j["offset"] = c.offset;
  json hs = json::array();
  for (const Harmonic& h : c.harmonics) {
    hs.push_back({{"amp", h.amplitude},
                  {"k", h.multiple},
                  {"phase", h.phase},
                  {"waveform", h.waveform == Waveform::Sine ? "sin" : "cos"}});
  }
  if (!hs.empty()) j["harmonics"] = hs;
  return j;
}

void require_positive(const PeriodicCoefficient& coef, const std::string& what) {
  if (!(extrema(coef).inf > 0.0)) {
    throw ConfigError(what + " must be strictly positive over the period");
  }
}

std::vector<BirthSpec> parse_births(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ConfigError(what + " must be a nonempty array");
  std::vector<BirthSpec> out;
  for (const json& bj : j) {
    BirthSpec bs;
    bs.b = parse_coef(bj.at("b"), what + ".b");
    bs.tau = parse_coef(bj.at("tau"), what + ".tau");
    bs.scalar = bj.value("scalar", "");
    out.push_back(std::move(bs));
  }
  return out;
}

}  // namespace

SystemConfig SystemConfig::from_json(const nlohmann::json& j) {
  SystemConfig cfg;
  try {
    cfg.omega = parse_omega(j.at("omega"));
    if (!(cfg.omega > 0.0)) throw ConfigError("omega must be positive");
    cfg.delta11 = parse_coef(j.at("m11").at("delta"), "m11.delta");
    cfg.c11 = parse_coef(j.at("m11").at("c"), "m11.c");
    cfg.delta12 = parse_coef(j.at("m12").at("delta"), "m12.delta");
    cfg.c12 = parse_coef(j.at("m12").at("c"), "m12.c");
    cfg.delta21 = parse_coef(j.at("m21").at("delta"), "m21.delta");
    cfg.c21 = parse_coef(j.at("m21").at("c"), "m21.c");
    cfg.delta22 = parse_coef(j.at("m22").at("delta"), "m22.delta");
    cfg.c22 = parse_coef(j.at("m22").at("c"), "m22.c");
    cfg.births1 = parse_births(j.at("births1"), "births1");
    cfg.births2 = parse_births(j.at("births2"), "births2");
    if (j.contains("scalars")) {
      for (const auto& [name, value] : j.at("scalars").items()) {
        cfg.scalars[name] = value.get<double>();
      }
    }
    if (j.contains("simulation")) {
      const json& s = j.at("simulation");
      if (s.contains("history")) {
        cfg.simulation.history = {s.at("history").at(0).get<double>(),
                                  s.at("history").at(1).get<double>()};
      }
      cfg.simulation.steps_per_period = s.value("steps_per_period", 1024);
      cfg.simulation.periods = s.value("periods", 20);
      cfg.simulation.residual_tol = s.value("residual_tol", 1e-4);
      cfg.simulation.defect_tol = s.value("defect_tol", 1e-2);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  for (const BirthSpec& bs : cfg.births1) {
    if (!bs.scalar.empty() && !cfg.scalars.count(bs.scalar)) {
      throw ConfigError("undeclared scalar '" + bs.scalar + "'");
    }
  }
  for (const BirthSpec& bs : cfg.births2) {
    if (!bs.scalar.empty() && !cfg.scalars.count(bs.scalar)) {
      throw ConfigError("undeclared scalar '" + bs.scalar + "'");
    }
  }
  cfg.build();  // validates positivity and delays
  return cfg;
}

SystemConfig SystemConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

nlohmann::json SystemConfig::to_json() const {
  json j;
  j["omega"] = omega;
  j["m11"] = {{"delta", coef_json(delta11)}, {"c", coef_json(c11)}};
  j["m12"] = {{"delta", coef_json(delta12)}, {"c", coef_json(c12)}};
  j["m21"] = {{"delta", coef_json(delta21)}, {"c", coef_json(c21)}};
  j["m22"] = {{"delta", coef_json(delta22)}, {"c", coef_json(c22)}};
  auto births_json = [](const std::vector<BirthSpec>& births) {
    json arr = json::array();
    for (const BirthSpec& bs : births) {
      json bj = {{"b", coef_json(bs.b)}, {"tau", coef_json(bs.tau)}};
      if (!bs.scalar.empty()) bj["scalar"] = bs.scalar;
      arr.push_back(bj);
    }
    return arr;
  };
  j["births1"] = births_json(births1);
  j["births2"] = births_json(births2);
  if (!scalars.empty()) j["scalars"] = scalars;
  j["simulation"] = {{"history", {simulation.history[0], simulation.history[1]}},
                     {"steps_per_period", simulation.steps_per_period},
                     {"periods", simulation.periods},
                     {"residual_tol", simulation.residual_tol},
                     {"defect_tol", simulation.defect_tol}};
  return j;
}

NicholsonSystem SystemConfig::build_with(const std::map<std::string, double>& overrides) const {
  auto scalar_value = [&](const std::string& name) {
    if (auto it = overrides.find(name); it != overrides.end()) return it->second;
    return scalars.at(name);
  };
  auto build_birth = [&](const BirthSpec& bs) {
    PeriodicCoefficient b = bs.b.build(omega);
    if (!bs.scalar.empty()) b = b.scaled(scalar_value(bs.scalar));
    return BirthTerm{std::move(b), bs.tau.build(omega)};
  };

  NicholsonSystem sys{
      MortalityTerm{delta11.build(omega), c11.build(omega)},
      MortalityTerm{delta12.build(omega), c12.build(omega)},
      MortalityTerm{delta21.build(omega), c21.build(omega)},
      MortalityTerm{delta22.build(omega), c22.build(omega)},
      {},
      {},
      omega};
  for (const BirthSpec& bs : births1) sys.births1.push_back(build_birth(bs));
  for (const BirthSpec& bs : births2) sys.births2.push_back(build_birth(bs));

  require_positive(sys.m11.delta, "m11.delta");
  require_positive(sys.m11.c, "m11.c");
  require_positive(sys.m12.delta, "m12.delta");
  require_positive(sys.m12.c, "m12.c");
  require_positive(sys.m21.delta, "m21.delta");
  require_positive(sys.m21.c, "m21.c");
  require_positive(sys.m22.delta, "m22.delta");
  require_positive(sys.m22.c, "m22.c");
  for (const BirthTerm& bt : sys.births1) require_positive(bt.b, "births1.b");
  for (const BirthTerm& bt : sys.births2) require_positive(bt.b, "births2.b");
  for (const auto* births : {&sys.births1, &sys.births2}) {
    for (const BirthTerm& bt : *births) {
      const Extrema e = extrema(bt.tau);
      if (e.inf < 0.0 || !(e.sup > 0.0)) {
        throw ConfigError("delays must be nonnegative with positive supremum");
      }
    }
  }
  return sys;
}

NicholsonSystem SystemConfig::build() const { return build_with({}); }

NicholsonSystem SystemConfig::build_unit_scalar(const std::string& name) const {
  if (!scalars.count(name)) throw ConfigError("unknown scalar '" + name + "'");
  return build_with({{name, 1.0}});
}

int SystemConfig::scalar_patch(const std::string& name) const {
  if (!scalars.count(name)) throw ConfigError("unknown scalar '" + name + "'");
  bool in1 = false, in2 = false;
  for (const BirthSpec& bs : births1) in1 |= (bs.scalar == name);
  for (const BirthSpec& bs : births2) in2 |= (bs.scalar == name);
  if (in1 && in2) throw ConfigError("scalar '" + name + "' spans both patches");
  if (!in1 && !in2) throw ConfigError("scalar '" + name + "' is attached to no birth term");
  return in1 ? 0 : 1;
}

}  // namespace nicholson
