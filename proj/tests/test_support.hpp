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

// Shared helpers for the test and acceptance binaries.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qet/experiments.hpp"

namespace qet::testing {

struct SamplePoint {
  std::string preset;
  std::vector<double> axis_values;
  PointConfiguration config;
};

/// Valid configurations of a steady-state preset at every `stride`-th grid
/// point (row-major), always including the first and last valid points.
inline std::vector<SamplePoint> preset_samples(const std::string& id, std::size_t stride) {
  const Scenario s = figure_preset(id);
  std::vector<SamplePoint> out;
  if (s.kind != ScenarioKind::steady_state) return out;
  std::vector<SamplePoint> valid;
  for (const auto& values : grid_points(s)) {
    auto c = configure_point(s, values);
    if (auto* cfg = std::get_if<PointConfiguration>(&c)) valid.push_back({id, values, *cfg});
  }
  for (std::size_t i = 0; i < valid.size(); ++i)
    if (i % stride == 0 || i + 1 == valid.size()) out.push_back(valid[i]);
  return out;
}

inline std::vector<std::string> steady_state_presets() {
  std::vector<std::string> ids;
  for (const auto& id : preset_ids())
    if (figure_preset(id).kind == ScenarioKind::steady_state) ids.push_back(id);
  return ids;
}

}  // namespace qet::testing
