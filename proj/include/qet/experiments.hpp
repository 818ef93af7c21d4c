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

// Parameter-sweep scenarios over bath and system parameters, and the figure
// presets built from them.
//
// Axis semantics: barred/delta axes split a pair symmetrically, e.g. `dT`
// sets T_A = T_bar + dT/2 and T_B = T_bar - dT/2 with T_bar taken from the
// base baths (or from a `T_bar` axis / series setting). Settings are applied
// as: series overrides, then absolute axes, then delta axes.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "qet/errors.hpp"
#include "qet/protocol.hpp"
#include "qet/redfield.hpp"
#include "qet/system_model.hpp"

namespace qet {

enum class AxisParam {
  T, T_bar, dT, T_a, T_b,
  mu, mu_bar, dmu, mu_a, mu_b,
  eps, eps_bar, deps, eps_a, eps_b,
  kappa, gamma,
  series,  // index into Scenario::series
  theta,   // eigenstate tables only
};

inline constexpr std::array<std::pair<AxisParam, std::string_view>, 19> kAxisNames{{
    {AxisParam::T, "T"},         {AxisParam::T_bar, "T_bar"},     {AxisParam::dT, "dT"},
    {AxisParam::T_a, "T_a"},     {AxisParam::T_b, "T_b"},         {AxisParam::mu, "mu"},
    {AxisParam::mu_bar, "mu_bar"}, {AxisParam::dmu, "dmu"},       {AxisParam::mu_a, "mu_a"},
    {AxisParam::mu_b, "mu_b"},   {AxisParam::eps, "eps"},         {AxisParam::eps_bar, "eps_bar"},
    {AxisParam::deps, "deps"},   {AxisParam::eps_a, "eps_a"},     {AxisParam::eps_b, "eps_b"},
    {AxisParam::kappa, "kappa"}, {AxisParam::gamma, "gamma"},     {AxisParam::series, "series"},
    {AxisParam::theta, "theta"},
}};

inline std::string_view axis_name(AxisParam p) {
  for (const auto& [param, name] : kAxisNames)
    if (param == p) return name;
  return "?";
}

inline std::optional<AxisParam> parse_axis_name(std::string_view name) {
  for (const auto& [param, n] : kAxisNames)
    if (n == name) return param;
  return std::nullopt;
}

inline bool is_delta_axis(AxisParam p) { return p == AxisParam::dT || p == AxisParam::dmu || p == AxisParam::deps; }

struct GridSpec {
  AxisParam param = AxisParam::T;
  double min = 0.0;
  double max = 1.0;
  int steps = 101;
  std::vector<double> values;  // explicit list; overrides min/max/steps when non-empty

  static GridSpec linspace(AxisParam p, double lo, double hi, int n) { return {p, lo, hi, n, {}}; }
  static GridSpec list(AxisParam p, std::vector<double> v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {p, v.empty() ? 0.0 : *lo, v.empty() ? 0.0 : *hi, static_cast<int>(v.size()), std::move(v)};
  }

  bool is_list() const { return !values.empty(); }

  /// Grid points; `resolution` overrides the step count of linspace axes.
  std::vector<double> points(std::optional<int> resolution = std::nullopt) const {
    if (is_list()) return values;
    const int n = resolution.value_or(steps);
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[i] = i == n - 1 ? max : min + (max - min) * i / (n - 1);
    return pts;
  }
};

struct Series {
  std::string label;
  std::vector<std::pair<AxisParam, double>> settings;
};

enum class ScenarioKind { steady_state, eigenstate_table };

struct Scenario {
  std::string name;
  std::string description;
  ScenarioKind kind = ScenarioKind::steady_state;
  SystemParams system;
  BathPair baths{};
  ThetaPolicy policy;
  DissipatorVariant variant = DissipatorVariant::paper;
  std::vector<GridSpec> axes;
  std::vector<Series> series;
  std::vector<std::string> caption_values;    // taken from the figure caption
  std::vector<std::string> defaulted_values;  // not printed in the caption
};

inline constexpr double kTemperatureFloor = 1e-3;

inline void validate_scenario(const Scenario& s) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::Config, "scenario '" + s.name + "': " + why); };
  if (s.axes.empty()) fail("no axes");
  if (s.axes.size() > 2) fail("at most two axes are supported");
  for (std::size_t i = 0; i < s.axes.size(); ++i) {
    const GridSpec& g = s.axes[i];
    const auto pts = g.points();
    if (pts.size() < 2) fail("axis '" + std::string(axis_name(g.param)) + "' needs at least 2 points");
    if (!(g.min < g.max)) fail("axis '" + std::string(axis_name(g.param)) + "' needs min < max");
    for (std::size_t j = 0; j < i; ++j)
      if (s.axes[j].param == g.param) fail("duplicate axis '" + std::string(axis_name(g.param)) + "'");
    if (g.param == AxisParam::theta && s.kind != ScenarioKind::eigenstate_table)
      fail("theta axis is only valid for eigenstate tables");
    if (g.param == AxisParam::series) {
      if (s.series.empty()) fail("series axis without series definitions");
      for (double v : pts)
        if (v < 0 || v >= static_cast<double>(s.series.size()) || v != std::floor(v)) fail("series index out of range");
    }
  }
  if (s.kind == ScenarioKind::eigenstate_table) {
    if (s.axes.size() != 1 || s.axes[0].param != AxisParam::theta) fail("eigenstate tables take a single theta axis");
    s.system.validate();
    return;
  }

  // bose => mu = 0: reject any chemical-potential setting that reaches a bosonic bath
  auto touches = [](AxisParam p, std::size_t bath) {
    switch (p) {
      case AxisParam::mu:
      case AxisParam::mu_bar:
      case AxisParam::dmu: return true;
      case AxisParam::mu_a: return bath == 0;
      case AxisParam::mu_b: return bath == 1;
      default: return false;
    }
  };
  std::vector<AxisParam> mu_params;
  for (const auto& g : s.axes) mu_params.push_back(g.param);
  for (const auto& ser : s.series)
    for (const auto& [p, v] : ser.settings) mu_params.push_back(p);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& bath = s.baths[j];
    if (bath.statistics != Statistics::bose) continue;
    if (bath.mu != 0.0) fail("bosonic bath with nonzero chemical potential");
    for (AxisParam p : mu_params)
      if (touches(p, j))
        fail("bosonic bath " + std::string(j == 0 ? "A" : "B") + " cannot take a chemical-potential setting ('" +
             std::string(axis_name(p)) + "')");
  }
  for (const auto& b : s.baths)
    if (!(b.gamma >= 0.0) || !std::isfinite(b.gamma) || !std::isfinite(b.mu)) fail("invalid bath coupling or mu");
}

struct PointConfiguration {
  SystemParams system;
  BathPair baths;
};

namespace detail {

struct PairValue {
  double bar;
  double diff;
  double first() const { return bar + diff / 2.0; }
  double second() const { return bar - diff / 2.0; }
  void set_first(double v) { *this = {(v + second()) / 2.0, v - second()}; }
  void set_second(double v) { *this = {(first() + v) / 2.0, first() - v}; }
};

struct WorkingPoint {
  PairValue temperature;
  PairValue mu;
  PairValue eps;
  double kappa;
  std::array<double, 2> gamma;

  void apply(AxisParam p, double v) {
    switch (p) {
      case AxisParam::T: temperature = {v, 0.0}; break;
      case AxisParam::T_bar: temperature.bar = v; break;
      case AxisParam::dT: temperature.diff = v; break;
      case AxisParam::T_a: temperature.set_first(v); break;
      case AxisParam::T_b: temperature.set_second(v); break;
      case AxisParam::mu: mu = {v, 0.0}; break;
      case AxisParam::mu_bar: mu.bar = v; break;
      case AxisParam::dmu: mu.diff = v; break;
      case AxisParam::mu_a: mu.set_first(v); break;
      case AxisParam::mu_b: mu.set_second(v); break;
      case AxisParam::eps: eps = {v, 0.0}; break;
      case AxisParam::eps_bar: eps.bar = v; break;
      case AxisParam::deps: eps.diff = v; break;
      case AxisParam::eps_a: eps.set_first(v); break;
      case AxisParam::eps_b: eps.set_second(v); break;
      case AxisParam::kappa: kappa = v; break;
      case AxisParam::gamma: gamma = {v, v}; break;
      case AxisParam::series:
      case AxisParam::theta: break;
    }
  }
};

}  // namespace detail

/// Maps axis values onto a concrete configuration, or returns a skip reason
/// when a domain guard is violated.
inline std::variant<PointConfiguration, std::string> configure_point(const Scenario& s,
                                                                     std::span<const double> axis_values) {
  const auto& b = s.baths;
  detail::WorkingPoint w{{(b[0].temperature + b[1].temperature) / 2.0, b[0].temperature - b[1].temperature},
                         {(b[0].mu + b[1].mu) / 2.0, b[0].mu - b[1].mu},
                         {s.system.omega() / 2.0, s.system.detuning()},
                         s.system.kappa,
                         {b[0].gamma, b[1].gamma}};

  for (std::size_t i = 0; i < s.axes.size(); ++i) {
    if (s.axes[i].param != AxisParam::series) continue;
    const auto& ser = s.series.at(static_cast<std::size_t>(axis_values[i]));
    for (const auto& [p, v] : ser.settings) w.apply(p, v);
  }
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < s.axes.size(); ++i)
      if (is_delta_axis(s.axes[i].param) == (pass == 1)) w.apply(s.axes[i].param, axis_values[i]);

  PointConfiguration c;
  c.system = {w.eps.first(), w.eps.second(), w.kappa};
  c.baths = b;
  c.baths[0].temperature = w.temperature.first();
  c.baths[1].temperature = w.temperature.second();
  c.baths[0].mu = w.mu.first();
  c.baths[1].mu = w.mu.second();
  c.baths[0].gamma = w.gamma[0];
  c.baths[1].gamma = w.gamma[1];

  std::ostringstream why;
  why.precision(6);
  if (!(c.baths[0].temperature >= kTemperatureFloor))
    why << "T_A=" << c.baths[0].temperature << " below floor " << kTemperatureFloor;
  else if (!(c.baths[1].temperature >= kTemperatureFloor))
    why << "T_B=" << c.baths[1].temperature << " below floor " << kTemperatureFloor;
  else if (!(c.system.eps_a > 0.0))
    why << "eps_A=" << c.system.eps_a << " not positive";
  else if (!(c.system.eps_b > 0.0))
    why << "eps_B=" << c.system.eps_b << " not positive";
  else if (c.system.kappa == 0.0)
    why << "kappa is zero";
  if (!why.str().empty()) return why.str();
  return c;
}

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SweepRecord {
  std::string scenario;
  std::array<std::string, 2> axis_names;
  std::array<double, 2> axis_values{kNaN, kNaN};

  double e_out_max = kNaN;
  double e_out_theta1 = kNaN;
  double e_out_theta2 = kNaN;
  double theta_star = kNaN;
  double d_coef = kNaN;
  double f_coef = kNaN;
  double e0 = kNaN;
  double e_a = kNaN;
  double injected = kNaN;
  std::array<double, 4> populations{kNaN, kNaN, kNaN, kNaN};
  double residual = kNaN;
  double min_eigenvalue = kNaN;
  double gap_ratio = kNaN;
  bool skipped = false;
  std::string skip_reason;

  // not serialized: output under the scenario's theta policy
  double theta_selected = kNaN;
  double e_out_selected = kNaN;
};

inline SweepRecord evaluate_point(const Scenario& s, std::span<const double> axis_values) {
  if (s.kind != ScenarioKind::steady_state)
    throw Error(ErrorKind::Config, "scenario '" + s.name + "' is an eigenstate table, not a steady-state sweep");
  if (axis_values.size() != s.axes.size())
    throw Error(ErrorKind::Config, "scenario '" + s.name + "': wrong number of axis values");

  SweepRecord r;
  r.scenario = s.name;
  for (std::size_t i = 0; i < s.axes.size(); ++i) {
    const GridSpec& g = s.axes[i];
    const double tol = 1e-12 * std::max(1.0, std::abs(g.max) + std::abs(g.min));
    if (!(axis_values[i] >= g.min - tol && axis_values[i] <= g.max + tol))
      throw Error(ErrorKind::Config, "axis value outside grid for '" + std::string(axis_name(g.param)) + "'");
    r.axis_names[i] = axis_name(g.param);
    r.axis_values[i] = axis_values[i];
  }

  auto configured = configure_point(s, axis_values);
  if (auto* reason = std::get_if<std::string>(&configured)) {
    r.skipped = true;
    r.skip_reason = *reason;
    return r;
  }
  const auto& c = std::get<PointConfiguration>(configured);
  try {
    const QetPoint q = qet_at_steady_state(c.system, c.baths, s.policy, s.variant);
    r.e_out_theta1 = q.protocol.e_out_theta1();
    r.e_out_theta2 = q.protocol.e_out_theta2();
    r.e_out_max = std::max(r.e_out_theta1, r.e_out_theta2);
    r.theta_star = q.protocol.theta_star;
    r.d_coef = q.protocol.d_coef;
    r.f_coef = q.protocol.f_coef;
    r.e0 = q.protocol.e0;
    r.e_a = q.protocol.e_a;
    r.injected = q.protocol.injected();
    r.populations = q.steady.populations;
    r.residual = q.steady.residual;
    r.min_eigenvalue = q.steady.min_eigenvalue;
    r.gap_ratio = q.steady.gap_ratio;
    r.theta_selected = q.protocol.theta;
    r.e_out_selected = q.protocol.e_out;
  } catch (const Error& e) {
    SweepRecord skipped;
    skipped.scenario = r.scenario;
    skipped.axis_names = r.axis_names;
    skipped.axis_values = r.axis_values;
    r = skipped;
    r.skipped = true;
    r.skip_reason = std::string(kind_name(e.kind())) + ": " + e.what();
  }
  return r;
}

struct SweepOptions {
  std::optional<int> resolution;  // overrides linspace step counts
  unsigned threads = 0;           // 0: QET_STEADY_THREADS, else hardware concurrency
};

inline unsigned sweep_thread_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("QET_STEADY_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) n = static_cast<unsigned>(v);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Row-major grid over the scenario axes.
inline std::vector<std::vector<double>> grid_points(const Scenario& s, std::optional<int> resolution = std::nullopt) {
  std::vector<std::vector<double>> out;
  const auto first = s.axes.at(0).points(resolution);
  if (s.axes.size() == 1) {
    for (double v : first) out.push_back({v});
    return out;
  }
  const auto second = s.axes.at(1).points(resolution);
  for (double a : first)
    for (double b : second) out.push_back({a, b});
  return out;
}

inline std::vector<SweepRecord> run_sweep(const Scenario& s, const SweepOptions& options = {}) {
  validate_scenario(s);
  if (s.kind != ScenarioKind::steady_state)
    throw Error(ErrorKind::Config, "scenario '" + s.name + "' is an eigenstate table; use eigenstate_table()");
  const auto points = grid_points(s, options.resolution);
  std::vector<SweepRecord> records(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) records[i] = evaluate_point(s, points[i]);
  };
  const unsigned n_threads = std::min<std::size_t>(sweep_thread_count(options.threads), points.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  if (std::all_of(records.begin(), records.end(), [](const SweepRecord& r) { return r.skipped; }))
    throw Error(ErrorKind::AllPointsSkipped,
                "scenario '" + s.name + "': every grid point was skipped (first reason: " + records.front().skip_reason +
                    ")");
  return records;
}

struct EigenstateRow {
  double theta = 0.0;
  std::array<double, 4> e_out{};
};

inline std::vector<EigenstateRow> eigenstate_table(const Scenario& s, std::optional<int> resolution = std::nullopt) {
  validate_scenario(s);
  if (s.kind != ScenarioKind::eigenstate_table)
    throw Error(ErrorKind::Config, "scenario '" + s.name + "' is not an eigenstate table");
  std::vector<EigenstateRow> rows;
  for (double theta : s.axes[0].points(resolution)) {
    EigenstateRow row{theta, {}};
    for (int k = 1; k <= 4; ++k) row.e_out[k - 1] = eigenstate_eout(s.system, k, theta);
    rows.push_back(row);
  }
  return rows;
}

// ---- figure presets -----------------------------------------------------------

inline const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids{
      "fig1",  "fig2a", "fig2b", "fig3",  "fig4a1", "fig4b1", "fig4a2_bosonic_heatmap",
      "fig5a", "fig5b", "fig5c", "fig6a", "fig6b",  "fig6c",  "fig7a",
      "fig7b", "fig8a1", "fig8a2", "fig8b1", "fig8b2", "fig8c1", "fig8c2"};
  return ids;
}

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline ReservoirSpec bose(double t) { return {Statistics::bose, t, 0.0, 0.05}; }
inline ReservoirSpec fermi(double t, double mu) { return {Statistics::fermi, t, mu, 0.05}; }

inline Scenario make(std::string name, std::string description, SystemParams system, BathPair baths,
                     std::vector<GridSpec> axes, std::vector<std::string> caption,
                     std::vector<std::string> defaulted) {
  Scenario s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.system = system;
  s.baths = baths;
  s.axes = std::move(axes);
  s.caption_values = std::move(caption);
  s.defaulted_values = std::move(defaulted);
  return s;
}

}  // namespace detail

inline Scenario figure_preset(std::string_view id) {
  using detail::bose;
  using detail::fermi;
  using detail::make;
  using G = GridSpec;
  using A = AxisParam;
  constexpr int n1 = 101, n2 = 41;
  const SystemParams eps2{2.0, 2.0, 1.0};

  if (id == "fig1") {
    Scenario s = make("fig1", "eigenstate energy output vs theta", eps2, {bose(1.0), bose(1.0)},
                      {G::linspace(A::theta, 0.0, std::numbers::pi, n1)}, {"eps_a=eps_b=2", "kappa=1"},
                      {"theta grid [0,pi]"});
    s.kind = ScenarioKind::eigenstate_table;
    return s;
  }
  if (id == "fig2a")
    return make("fig2a", "equilibrium bosonic baths: E_out vs T for several eps", eps2, {bose(1.0), bose(1.0)},
                {G::list(A::eps, {0.1, 1.0, 5.0, 10.0}), G::linspace(A::T, 0.1, 10.0, 50)},
                {"eps in {0.1,1,5,10}", "kappa=1", "g=0.05"}, {"T range [0.1,10]", "50 T points"});
  if (id == "fig2b")
    return make("fig2b", "equilibrium bosonic baths: E_out vs eps for several T", eps2, {bose(1.0), bose(1.0)},
                {G::list(A::T, {0.1, 1.0, 5.0, 10.0}), G::linspace(A::eps, 0.1, 10.0, n1)},
                {"T in {0.1,1,5,10}", "kappa=1", "g=0.05"}, {"eps range [0.1,10]"});
  if (id == "fig3")
    return make("fig3", "equilibrium fermionic baths: E_out(theta1), E_out(theta2) and p4 vs mu", eps2,
                {fermi(1.0, 0.0), fermi(1.0, 0.0)}, {G::list(A::eps, {1.0, 3.0}), G::linspace(A::mu, 0.0, 8.0, n1)},
                {"eps in {1,3}", "T=1", "kappa=1", "g=0.05"}, {"mu range [0,8]"});
  if (id == "fig4a1")
    return make("fig4a1", "nonequilibrium bosonic baths: E_out vs dT for several T_bar", eps2,
                {bose(1.0), bose(1.0)}, {G::list(A::T_bar, {0.5, 2.0, 5.0}), G::linspace(A::dT, -4.0, 4.0, n1)},
                {"T_bar in {0.5,2,5}", "eps_a=eps_b=2", "kappa=1", "g=0.05"}, {"dT range [-4,4]"});
  if (id == "fig4b1") {
    Scenario s = make("fig4b1", "detuned qubits, equilibrium bosonic baths: E_out vs deps", eps2,
                      {bose(1.0), bose(1.0)}, {G::list(A::series, {0.0, 1.0, 2.0}), G::linspace(A::deps, -1.8, 1.8, n1)},
                      {"(eps_bar,T) in {(1,0.5),(2,0.5),(2,2)}", "kappa=1", "g=0.05"}, {"deps range [-1.8,1.8]"});
    s.series = {{"eps_bar=1,T=0.5", {{A::eps_bar, 1.0}, {A::T, 0.5}}},
                {"eps_bar=2,T=0.5", {{A::eps_bar, 2.0}, {A::T, 0.5}}},
                {"eps_bar=2,T=2", {{A::eps_bar, 2.0}, {A::T, 2.0}}}};
    return s;
  }
  if (id == "fig4a2_bosonic_heatmap")
    return make("fig4a2_bosonic_heatmap", "detuned qubits, nonequilibrium bosonic baths: E_out over (dT, deps)", eps2,
                {bose(0.5), bose(0.5)}, {G::linspace(A::dT, -1.0, 1.0, n2), G::linspace(A::deps, -3.0, 3.0, n2)},
                {"eps_bar=2", "T_bar=0.5", "kappa=1", "g=0.05"}, {"dT range [-1,1]", "deps range [-3,3]"});

  auto fermi_dt = [&](std::string name, double mu) {
    return make(std::move(name), "fermionic baths, nonequilibrium temperatures: E_out vs dT", eps2,
                {fermi(1.0, mu), fermi(1.0, mu)}, {G::linspace(A::dT, -2.0, 2.0, n1)},
                {"mu=" + detail::fmt(mu), "T_bar=1", "kappa=1", "g=0.05"}, {"eps_a=eps_b=2", "dT range [-2,2]"});
  };
  if (id == "fig5a") return fermi_dt("fig5a", 1.0);
  if (id == "fig5b") return fermi_dt("fig5b", 2.0);
  if (id == "fig5c") return fermi_dt("fig5c", 8.0);

  auto fermi_dmu = [&](std::string name, double mu_bar) {
    return make(std::move(name), "fermionic baths, nonequilibrium chemical potentials: E_out vs dmu", eps2,
                {fermi(1.0, mu_bar), fermi(1.0, mu_bar)}, {G::linspace(A::dmu, -4.0, 4.0, n1)},
                {"mu_bar=" + detail::fmt(mu_bar), "T=1", "kappa=1", "g=0.05"}, {"eps_a=eps_b=2", "dmu range [-4,4]"});
  };
  if (id == "fig6a") return fermi_dmu("fig6a", 1.0);
  if (id == "fig6b") return fermi_dmu("fig6b", 6.0);
  if (id == "fig6c") return fermi_dmu("fig6c", 8.0);

  auto fermi_deps = [&](std::string name, double mu) {
    return make(std::move(name), "detuned qubits, equilibrium fermionic baths: E_out vs deps", eps2,
                {fermi(1.0, mu), fermi(1.0, mu)}, {G::linspace(A::deps, -3.0, 3.0, n1)},
                {"mu=" + detail::fmt(mu), "eps_bar=2", "T=1", "kappa=1", "g=0.05"}, {"deps range [-3,3]"});
  };
  if (id == "fig7a") return fermi_deps("fig7a", 1.0);
  if (id == "fig7b") return fermi_deps("fig7b", 8.0);

  const G dt_axis = G::linspace(A::dT, -1.0, 1.0, n2);
  const G dmu_axis = G::linspace(A::dmu, -4.0, 4.0, n2);
  const G deps_axis = G::linspace(A::deps, -3.0, 3.0, n2);
  auto heatmap = [&](std::string name, std::string what, double t, double mu, G first, G second,
                     std::vector<std::string> caption) {
    caption.push_back("kappa=1");
    caption.push_back("g=0.05");
    return make(std::move(name), "fermionic baths, two nonequilibrium parameters: E_out over " + what, eps2,
                {fermi(t, mu), fermi(t, mu)}, {std::move(first), std::move(second)}, std::move(caption),
                {std::string(axis_name(first.param)) + "/" + std::string(axis_name(second.param)) + " ranges"});
  };
  if (id == "fig8a1") return heatmap("fig8a1", "(dT, dmu)", 0.5, 1.0, dt_axis, dmu_axis, {"T_bar=0.5", "mu_bar=1", "eps_a=eps_b=2"});
  if (id == "fig8a2") return heatmap("fig8a2", "(dT, dmu)", 0.5, 8.0, dt_axis, dmu_axis, {"T_bar=0.5", "mu_bar=8", "eps_a=eps_b=2"});
  if (id == "fig8b1") return heatmap("fig8b1", "(deps, dT)", 0.5, 1.0, deps_axis, dt_axis, {"eps_bar=2", "T_bar=0.5", "mu=1"});
  if (id == "fig8b2") return heatmap("fig8b2", "(deps, dT)", 0.5, 8.0, deps_axis, dt_axis, {"eps_bar=2", "T_bar=0.5", "mu=8"});
  if (id == "fig8c1") return heatmap("fig8c1", "(deps, dmu)", 0.5, 1.0, deps_axis, dmu_axis, {"eps_bar=2", "mu_bar=1", "T=0.5"});
  if (id == "fig8c2") return heatmap("fig8c2", "(deps, dmu)", 0.5, 6.0, deps_axis, dmu_axis, {"eps_bar=2", "mu_bar=6", "T=0.5"});

  throw Error(ErrorKind::UnknownPreset, "unknown figure preset '" + std::string(id) + "'");
}

}  // namespace qet
