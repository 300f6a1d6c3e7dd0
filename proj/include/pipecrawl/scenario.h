// Copyright 2026 The Pipecrawl Authors
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

#ifndef PIPECRAWL_SCENARIO_H_
#define PIPECRAWL_SCENARIO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pipecrawl/geometry.h"
#include "pipecrawl/planner.h"
#include "pipecrawl/robot_model.h"
#include "pipecrawl/simulator.h"

namespace pipecrawl {

// Everything one CLI invocation needs. Parsed from a flat `key = value`
// file with dotted sections, e.g.
//
//   robot.weight_n = 7
//   sim.path_model = arc
//   network.0 = straight 500
//   network.1 = tjunction left
//
// Network entries are `straight <length_mm>`, `elbow <bend_radius_mm>
// <bend_angle_deg>` or `tjunction <left|right>`; every segment takes the
// robot's pipe radius.
struct ScenarioConfig {
  RobotParams robot;
  std::vector<PipeSegment> network{StraightPipe{500.0, 80.0}};
  SimConfig sim;
  ManeuverOptions maneuver;
  double initial_theta1_deg = 0.0;
};

// Parses `text`, then applies `overrides` ("key=value") in order. Throws
// ConfigError naming the key (and line, for file input) on any problem;
// nothing is returned on failure.
ScenarioConfig ParseScenario(std::string_view text,
                             std::span<const std::string> overrides = {});

ScenarioConfig LoadScenario(const std::filesystem::path& path,
                            std::span<const std::string> overrides = {});

// True for config keys that take a plain number.
bool IsNumericKey(std::string_view key);

// Sets one numeric key on an already valid config and revalidates. Throws
// ConfigError for unknown or non-numeric keys.
void SetNumeric(ScenarioConfig& config, std::string_view key, double value);

// Planner options with the simulation's path model and analysis inclination.
ManeuverOptions EffectiveManeuver(const ScenarioConfig& config);

RobotState InitialRobotState(const ScenarioConfig& config);

}  // namespace pipecrawl

#endif  // PIPECRAWL_SCENARIO_H_
