// Copyright 2026 The qet-steady Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON run configuration. Unknown keys are rejected.
//
//   {
//     "system": {"eps_a": 2, "eps_b": 2, "kappa": 1},
//     "bath_a": {"statistics": "bose", "T": 1, "mu": 0, "gamma": 0.05},
//     "bath_b": {...},
//     "protocol": {"theta_policy": "optimal", "theta": 0.3},
//     "sweep": {"name": "my_sweep",
//               "axes": [{"name": "dT", "min": -1, "max": 1, "steps": 41},
//                        {"name": "eps", "values": [1, 3]}],
//               "series": [{"label": "low", "set": {"T": 0.5}}]},
//     "output": {"path": "out.csv", "format": "csv"},
//     "dissipator_variant": "paper"
//   }

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qet/errors.hpp"
#include "qet/experiments.hpp"
#include "qet/io.hpp"
#include "qet/protocol.hpp"
#include "qet/redfield.hpp"
#include "qet/system_model.hpp"

namespace qet {

struct OutputSpec {
  std::string path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
};

struct SweepSpec {
  std::string name = "sweep";
  std::vector<GridSpec> axes;
  std::vector<Series> series;
};

struct RunConfig {
  SystemParams system;
  BathPair baths{};
  ThetaPolicy policy;
  std::optional<SweepSpec> sweep;
  OutputSpec output;
  DissipatorVariant variant = DissipatorVariant::paper;

  /// Domain guards; throws InvalidParams or Config.
  void validate() const {
    system.validate();
    for (const auto& b : baths) b.validate();
    if (policy.kind == ThetaPolicyKind::fixed && !std::isfinite(policy.theta))
      throw Error(ErrorKind::Config, "fixed theta policy needs a finite theta");
    if (sweep) validate_scenario(scenario());
  }

  Scenario scenario() const {
    if (!sweep) throw Error(ErrorKind::Config, "configuration has no sweep block");
    Scenario s;
    s.name = sweep->name;
    s.description = "user sweep";
    s.system = system;
    s.baths = baths;
    s.policy = policy;
    s.variant = variant;
    s.axes = sweep->axes;
    s.series = sweep->series;
    return s;
  }
};

inline Statistics parse_statistics(std::string_view s) {
  if (s == "bose") return Statistics::bose;
  if (s == "fermi") return Statistics::fermi;
  throw Error(ErrorKind::Config, "unknown statistics '" + std::string(s) + "' (expected bose or fermi)");
}

inline DissipatorVariant parse_variant(std::string_view s) {
  if (s == "paper") return DissipatorVariant::paper;
  if (s == "standard") return DissipatorVariant::standard;
  throw Error(ErrorKind::Config, "unknown dissipator variant '" + std::string(s) + "' (expected paper or standard)");
}

inline ThetaPolicyKind parse_theta_policy(std::string_view s) {
  if (s == "optimal") return ThetaPolicyKind::optimal;
  if (s == "theta1") return ThetaPolicyKind::theta1;
  if (s == "theta2") return ThetaPolicyKind::theta2;
  if (s == "fixed") return ThetaPolicyKind::fixed;
  throw Error(ErrorKind::Config, "unknown theta policy '" + std::string(s) + "' (expected optimal, theta1, theta2 or fixed)");
}

namespace detail {

using nlohmann::json;

inline void require_object(const json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw Error(ErrorKind::Config, where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::Config, where + ": unknown key '" + key + "'");
  }
}

inline double get_number(const json& j, const char* key, const std::string& where, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw Error(ErrorKind::Config, where + "." + key + ": expected a number");
  return j[key].get<double>();
}

inline std::string get_string(const json& j, const char* key, const std::string& where, std::string fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) throw Error(ErrorKind::Config, where + "." + key + ": expected a string");
  return j[key].get<std::string>();
}

inline AxisParam get_axis(const std::string& name, const std::string& where) {
  const auto p = parse_axis_name(name);
  if (!p) throw Error(ErrorKind::Config, where + ": unknown axis '" + name + "'");
  return *p;
}

inline ReservoirSpec parse_bath(const json& j, const std::string& where) {
  require_object(j, where, {"statistics", "T", "mu", "gamma"});
  ReservoirSpec b;
  b.statistics = parse_statistics(get_string(j, "statistics", where, "bose"));
  b.temperature = get_number(j, "T", where, b.temperature);
  b.mu = get_number(j, "mu", where, b.mu);
  b.gamma = get_number(j, "gamma", where, b.gamma);
  return b;
}

inline SweepSpec parse_sweep(const json& j) {
  require_object(j, "sweep", {"name", "axes", "series"});
  SweepSpec s;
  s.name = get_string(j, "name", "sweep", s.name);
  if (!j.contains("axes") || !j["axes"].is_array()) throw Error(ErrorKind::Config, "sweep.axes: expected an array");
  for (std::size_t i = 0; i < j["axes"].size(); ++i) {
    const auto& a = j["axes"][i];
    const std::string where = "sweep.axes[" + std::to_string(i) + "]";
    require_object(a, where, {"name", "min", "max", "steps", "values"});
    if (!a.contains("name")) throw Error(ErrorKind::Config, where + ": missing name");
    const AxisParam param = get_axis(get_string(a, "name", where, ""), where);
    if (a.contains("values")) {
      if (a.contains("min") || a.contains("max") || a.contains("steps"))
        throw Error(ErrorKind::Config, where + ": give either values or min/max/steps");
      if (!a["values"].is_array()) throw Error(ErrorKind::Config, where + ".values: expected an array");
      std::vector<double> v;
      for (const auto& x : a["values"]) {
        if (!x.is_number()) throw Error(ErrorKind::Config, where + ".values: expected numbers");
        v.push_back(x.get<double>());
      }
      s.axes.push_back(GridSpec::list(param, std::move(v)));
    } else {
      if (!a.contains("min") || !a.contains("max")) throw Error(ErrorKind::Config, where + ": missing min/max");
      int steps = 101;
      if (a.contains("steps")) {
        if (!a["steps"].is_number_integer()) throw Error(ErrorKind::Config, where + ".steps: expected an integer");
        steps = a["steps"].get<int>();
      }
      s.axes.push_back(GridSpec::linspace(param, get_number(a, "min", where, 0), get_number(a, "max", where, 0), steps));
    }
  }
  if (j.contains("series")) {
    if (!j["series"].is_array()) throw Error(ErrorKind::Config, "sweep.series: expected an array");
    for (std::size_t i = 0; i < j["series"].size(); ++i) {
      const auto& e = j["series"][i];
      const std::string where = "sweep.series[" + std::to_string(i) + "]";
      require_object(e, where, {"label", "set"});
      Series ser{get_string(e, "label", where, "series" + std::to_string(i)), {}};
      if (!e.contains("set") || !e["set"].is_object()) throw Error(ErrorKind::Config, where + ".set: expected an object");
      for (const auto& [key, value] : e["set"].items()) {
        if (!value.is_number()) throw Error(ErrorKind::Config, where + ".set." + key + ": expected a number");
        const AxisParam p = get_axis(key, where + ".set");
        if (p == AxisParam::series || p == AxisParam::theta)
          throw Error(ErrorKind::Config, where + ".set: '" + key + "' cannot be set by a series");
        ser.settings.emplace_back(p, value.get<double>());
      }
      s.series.push_back(std::move(ser));
    }
  }
  return s;
}

}  // namespace detail

/// Parses and validates a configuration document on top of `base`.
inline RunConfig parse_run_config(const nlohmann::json& j, RunConfig base = {}) {
  using detail::get_number;
  using detail::get_string;
  detail::require_object(j, "config", {"system", "bath_a", "bath_b", "protocol", "sweep", "output", "dissipator_variant"});
  RunConfig c = std::move(base);
  if (j.contains("system")) {
    const auto& s = j["system"];
    detail::require_object(s, "system", {"eps_a", "eps_b", "kappa"});
    c.system.eps_a = get_number(s, "eps_a", "system", c.system.eps_a);
    c.system.eps_b = get_number(s, "eps_b", "system", c.system.eps_b);
    c.system.kappa = get_number(s, "kappa", "system", c.system.kappa);
  }
  if (j.contains("bath_a")) c.baths[0] = detail::parse_bath(j["bath_a"], "bath_a");
  if (j.contains("bath_b")) c.baths[1] = detail::parse_bath(j["bath_b"], "bath_b");
  if (j.contains("protocol")) {
    const auto& p = j["protocol"];
    detail::require_object(p, "protocol", {"theta_policy", "theta"});
    if (p.contains("theta_policy")) c.policy.kind = parse_theta_policy(get_string(p, "theta_policy", "protocol", ""));
    c.policy.theta = get_number(p, "theta", "protocol", c.policy.theta);
    if (p.contains("theta") && !p.contains("theta_policy")) c.policy.kind = ThetaPolicyKind::fixed;
  }
  if (j.contains("sweep")) c.sweep = detail::parse_sweep(j["sweep"]);
  if (j.contains("output")) {
    const auto& o = j["output"];
    detail::require_object(o, "output", {"path", "format"});
    c.output.path = get_string(o, "path", "output", c.output.path);
    if (o.contains("format")) c.output.format = parse_output_format(get_string(o, "format", "output", ""));
  }
  if (j.contains("dissipator_variant")) {
    if (!j["dissipator_variant"].is_string()) throw Error(ErrorKind::Config, "dissipator_variant: expected a string");
    c.variant = parse_variant(j["dissipator_variant"].get<std::string>());
  }
  return c;
}

inline RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot read configuration file '" + path.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Config, "configuration file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_run_config(j, std::move(base));
}

}  // namespace qet
