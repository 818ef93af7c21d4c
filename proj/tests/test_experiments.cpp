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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "qet/experiments.hpp"
#include "qet/io.hpp"
#include "test_support.hpp"

namespace qet {
namespace {

template <class Fn>
void expect_error(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    FAIL() << "expected " << kind_name(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  write_records_csv(records, os);
  return os.str();
}

TEST(FigurePreset, AllIdsResolveAndValidate) {
  for (const auto& id : preset_ids()) {
    const Scenario s = figure_preset(id);
    EXPECT_EQ(s.name, id);
    EXPECT_NO_THROW(validate_scenario(s)) << id;
    EXPECT_FALSE(s.caption_values.empty()) << id;
    for (const auto& b : s.baths) EXPECT_EQ(b.gamma, 0.05) << id;
    EXPECT_EQ(s.system.kappa, 1.0) << id;
  }
  EXPECT_EQ(preset_ids().size(), 21u);
}

TEST(FigurePreset, UnknownId) {
  expect_error(ErrorKind::UnknownPreset, [] { figure_preset("fig9"); });
}

TEST(FigurePreset, Fig2aParameterization) {
  const Scenario s = figure_preset("fig2a");
  ASSERT_EQ(s.axes.size(), 2u);
  EXPECT_EQ(s.axes[0].param, AxisParam::eps);
  EXPECT_EQ(s.axes[0].points(), (std::vector<double>{0.1, 1.0, 5.0, 10.0}));
  EXPECT_EQ(s.axes[1].param, AxisParam::T);
  EXPECT_EQ(s.axes[1].points().front(), 0.1);
  EXPECT_EQ(s.axes[1].points().back(), 10.0);
  for (const auto& b : s.baths) {
    EXPECT_EQ(b.statistics, Statistics::bose);
    EXPECT_EQ(b.mu, 0.0);
  }
}

TEST(FigurePreset, Fig1IsEigenstateTable) {
  const Scenario s = figure_preset("fig1");
  EXPECT_EQ(s.kind, ScenarioKind::eigenstate_table);
  EXPECT_EQ(s.system.eps_a, 2.0);
  EXPECT_EQ(s.system.eps_b, 2.0);
  const auto rows = eigenstate_table(s);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows.front().theta, 0.0);
  EXPECT_DOUBLE_EQ(rows.back().theta, std::numbers::pi);
  for (const auto& r : rows) {
    EXPECT_EQ(r.e_out[0] + r.e_out[3], 0.0);
    EXPECT_EQ(r.e_out[1] + r.e_out[2], 0.0);
  }
  expect_error(ErrorKind::Config, [&] { run_sweep(s); });
}

TEST(RunSweep, Fig2aRecordCountAndOrder) {
  const auto records = run_sweep(figure_preset("fig2a"));
  ASSERT_EQ(records.size(), 200u);
  EXPECT_EQ(records[0].axis_values[0], 0.1);
  EXPECT_EQ(records[49].axis_values[0], 0.1);
  EXPECT_EQ(records[50].axis_values[0], 1.0);
  EXPECT_EQ(records[1].axis_values[1], records[51].axis_values[1]);
  for (const auto& r : records) {
    EXPECT_FALSE(r.skipped);
    EXPECT_NEAR(r.e_out_max, std::max(r.e_out_theta1, r.e_out_theta2), 1e-12);
  }
}

TEST(RunSweep, ReproducibleAcrossThreadCounts) {
  const Scenario s = figure_preset("fig8a1");
  const auto serial = to_csv(run_sweep(s, {11, 1}));
  EXPECT_EQ(serial, to_csv(run_sweep(s, {11, 4})));
  EXPECT_EQ(serial, to_csv(run_sweep(s, {11, 0})));
}

TEST(RunSweep, SkippedPointsAreKept) {
  const auto records = run_sweep(figure_preset("fig4a1"));
  EXPECT_EQ(records.size(), 303u);
  std::size_t skipped = 0;
  for (const auto& r : records)
    if (r.skipped) {
      ++skipped;
      EXPECT_FALSE(r.skip_reason.empty());
      EXPECT_TRUE(std::isnan(r.e_out_max));
    }
  EXPECT_GT(skipped, 0u);
  const SweepRecord edge = evaluate_point(figure_preset("fig4a1"), std::vector<double>{0.5, 4.0});
  EXPECT_TRUE(edge.skipped);
  EXPECT_NE(edge.skip_reason.find("T_B"), std::string::npos);
}

TEST(RunSweep, AllPointsSkipped) {
  Scenario s = figure_preset("fig5a");
  s.axes = {GridSpec::linspace(AxisParam::dT, 2.5, 4.0, 5)};
  expect_error(ErrorKind::AllPointsSkipped, [&] { run_sweep(s); });
}

TEST(ValidateScenario, Rejections) {
  Scenario s = figure_preset("fig2a");
  s.axes.push_back(GridSpec::linspace(AxisParam::kappa, 0.5, 1.0, 3));
  expect_error(ErrorKind::Config, [&] { validate_scenario(s); });  // three axes

  s = figure_preset("fig5a");
  s.axes = {GridSpec::linspace(AxisParam::dT, 1.0, 1.0, 5)};
  expect_error(ErrorKind::Config, [&] { validate_scenario(s); });  // min == max

  s.axes = {GridSpec::linspace(AxisParam::dT, 0.0, 1.0, 1)};
  expect_error(ErrorKind::Config, [&] { validate_scenario(s); });  // one point

  s.axes = {};
  expect_error(ErrorKind::Config, [&] { validate_scenario(s); });

  s.axes = {GridSpec::linspace(AxisParam::theta, 0.0, 1.0, 5)};
  expect_error(ErrorKind::Config, [&] { validate_scenario(s); });
}

TEST(ValidateScenario, BosonicChemicalPotentialAxis) {
  Scenario s = figure_preset("fig4a1");
  s.axes = {GridSpec::linspace(AxisParam::dmu, -1.0, 1.0, 5)};
  expect_error(ErrorKind::Config, [&] { run_sweep(s); });
  s.axes = {GridSpec::linspace(AxisParam::mu_b, -1.0, 1.0, 5)};
  expect_error(ErrorKind::Config, [&] { validate_scenario(s); });
  s.baths[1].statistics = Statistics::fermi;
  EXPECT_NO_THROW(validate_scenario(s));  // mu_b only reaches the fermionic bath
}

TEST(ConfigurePoint, DerivedParameterMap) {
  Scenario s = figure_preset("fig4a2_bosonic_heatmap");
  auto c = std::get<PointConfiguration>(configure_point(s, std::vector<double>{0.4, -1.0}));
  EXPECT_DOUBLE_EQ(c.baths[0].temperature, 0.7);
  EXPECT_DOUBLE_EQ(c.baths[1].temperature, 0.3);
  EXPECT_DOUBLE_EQ(c.system.eps_a, 1.5);
  EXPECT_DOUBLE_EQ(c.system.eps_b, 2.5);

  s = figure_preset("fig4b1");  // series first, then the delta axis
  c = std::get<PointConfiguration>(configure_point(s, std::vector<double>{0.0, 0.5}));
  EXPECT_DOUBLE_EQ(c.system.eps_a, 1.25);
  EXPECT_DOUBLE_EQ(c.system.eps_b, 0.75);
  EXPECT_DOUBLE_EQ(c.baths[0].temperature, 0.5);
  EXPECT_DOUBLE_EQ(c.baths[1].temperature, 0.5);

  s = figure_preset("fig6a");
  c = std::get<PointConfiguration>(configure_point(s, std::vector<double>{-4.0}));
  EXPECT_DOUBLE_EQ(c.baths[0].mu, -1.0);
  EXPECT_DOUBLE_EQ(c.baths[1].mu, 3.0);

  s.axes = {GridSpec::linspace(AxisParam::T_a, 0.5, 2.0, 4)};
  c = std::get<PointConfiguration>(configure_point(s, std::vector<double>{2.0}));
  EXPECT_DOUBLE_EQ(c.baths[0].temperature, 2.0);
  EXPECT_DOUBLE_EQ(c.baths[1].temperature, 1.0);

  s.axes = {GridSpec::linspace(AxisParam::eps_b, -1.0, 2.0, 4)};
  EXPECT_TRUE(std::holds_alternative<std::string>(configure_point(s, std::vector<double>{-1.0})));
}

TEST(EvaluatePoint, FermionicEquilibriumMatchesDirectCall) {
  const SweepRecord r = evaluate_point(figure_preset("fig5b"), std::vector<double>{0.0});
  const ReservoirSpec bath{Statistics::fermi, 1.0, 2.0, 0.05};
  const auto direct = qet_at_steady_state({2.0, 2.0, 1.0}, {bath, bath}, ThetaPolicy::optimal());
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(r.populations[k], direct.steady.populations[k], 1e-12);
  EXPECT_NEAR(r.e_out_max, direct.protocol.e_max, 1e-12);
}

TEST(EvaluatePoint, NegativeFermionicChemicalPotentialIsValid) {
  const SweepRecord r = evaluate_point(figure_preset("fig6a"), std::vector<double>{-4.0});
  EXPECT_FALSE(r.skipped);
}

TEST(EvaluatePoint, OutsideGridIsConfigError) {
  expect_error(ErrorKind::Config, [] { evaluate_point(figure_preset("fig5a"), std::vector<double>{2.5}); });
}

// Equilibrium center of each nonequilibrium preset vs the equilibrium presets
// (or a direct steady-state evaluation where no equilibrium preset covers it).
TEST(EvaluatePoint, EquilibriumCentersMatchEquilibriumScenarios) {
  const Scenario fig2a = figure_preset("fig2a"), fig3 = figure_preset("fig3");
  auto bose_eq = [&](double eps, double t) { return evaluate_point(fig2a, std::vector<double>{eps, t}).e_out_max; };
  auto fermi_eq = [&](double eps, double mu) { return evaluate_point(fig3, std::vector<double>{eps, mu}).e_out_max; };
  auto at = [](const char* id, std::vector<double> v) { return evaluate_point(figure_preset(id), v).e_out_max; };
  auto direct = [](double t, double mu) {
    const ReservoirSpec b{Statistics::fermi, t, mu, 0.05};
    return qet_at_steady_state({2.0, 2.0, 1.0}, {b, b}, ThetaPolicy::optimal()).protocol.e_max;
  };

  for (double tbar : {0.5, 2.0, 5.0}) EXPECT_NEAR(at("fig4a1", {tbar, 0.0}), bose_eq(2.0, tbar), 1e-10);
  EXPECT_NEAR(at("fig4b1", {0.0, 0.0}), bose_eq(1.0, 0.5), 1e-10);
  EXPECT_NEAR(at("fig4b1", {1.0, 0.0}), bose_eq(2.0, 0.5), 1e-10);
  EXPECT_NEAR(at("fig4b1", {2.0, 0.0}), bose_eq(2.0, 2.0), 1e-10);
  EXPECT_NEAR(at("fig4a2_bosonic_heatmap", {0.0, 0.0}), bose_eq(2.0, 0.5), 1e-10);
  EXPECT_NEAR(at("fig5a", {0.0}), fermi_eq(2.0, 1.0), 1e-10);
  EXPECT_NEAR(at("fig5b", {0.0}), fermi_eq(2.0, 2.0), 1e-10);
  EXPECT_NEAR(at("fig5c", {0.0}), fermi_eq(2.0, 8.0), 1e-10);
  EXPECT_NEAR(at("fig6a", {0.0}), fermi_eq(2.0, 1.0), 1e-10);
  EXPECT_NEAR(at("fig6b", {0.0}), fermi_eq(2.0, 6.0), 1e-10);
  EXPECT_NEAR(at("fig6c", {0.0}), fermi_eq(2.0, 8.0), 1e-10);
  EXPECT_NEAR(at("fig7a", {0.0}), fermi_eq(2.0, 1.0), 1e-10);
  EXPECT_NEAR(at("fig7b", {0.0}), fermi_eq(2.0, 8.0), 1e-10);
  EXPECT_NEAR(at("fig8a1", {0.0, 0.0}), direct(0.5, 1.0), 1e-10);
  EXPECT_NEAR(at("fig8a2", {0.0, 0.0}), direct(0.5, 8.0), 1e-10);
  EXPECT_NEAR(at("fig8b1", {0.0, 0.0}), direct(0.5, 1.0), 1e-10);
  EXPECT_NEAR(at("fig8b2", {0.0, 0.0}), direct(0.5, 8.0), 1e-10);
  EXPECT_NEAR(at("fig8c1", {0.0, 0.0}), direct(0.5, 1.0), 1e-10);
  EXPECT_NEAR(at("fig8c2", {0.0, 0.0}), direct(0.5, 6.0), 1e-10);
}

TEST(RunSweep, BosonicHeatmapCenterIsInformational) {
  const Scenario s = figure_preset("fig4a2_bosonic_heatmap");
  const auto records = run_sweep(s);
  EXPECT_EQ(records.size(), 41u * 41u);
  const SweepRecord& center = records[20 * 41 + 20];
  EXPECT_EQ(center.axis_values[0], 0.0);
  EXPECT_EQ(center.axis_values[1], 0.0);
  ::testing::Test::RecordProperty("center_e_out_max", std::to_string(center.e_out_max));
}

TEST(GridSpec, Points) {
  const auto pts = GridSpec::linspace(AxisParam::T, 0.0, 1.0, 5).points();
  EXPECT_EQ(pts, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(GridSpec::linspace(AxisParam::T, 0.0, 1.0, 5).points(3).size(), 3u);
  EXPECT_EQ(GridSpec::list(AxisParam::T, {3.0, 1.0}).points(7).size(), 2u);
}

TEST(AxisNames, RoundTrip) {
  for (const auto& [param, name] : kAxisNames) {
    EXPECT_EQ(axis_name(param), name);
    EXPECT_EQ(parse_axis_name(name), param);
  }
  EXPECT_FALSE(parse_axis_name("Temperature").has_value());
}

}  // namespace
}  // namespace qet
