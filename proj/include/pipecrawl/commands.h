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

#ifndef PIPECRAWL_COMMANDS_H_
#define PIPECRAWL_COMMANDS_H_

#include <string>
#include <string_view>
#include <vector>

#include "pipecrawl/planner.h"
#include "pipecrawl/scenario.h"
#include "pipecrawl/simulator.h"

namespace pipecrawl {

inline constexpr std::string_view kTrajectoryCsvHeader =
    "t_s,x_mm,y_mm,heading_deg,theta1_deg,v1_mm_s,v2_mm_s,v3_mm_s,"
    "w1_rad_s,w2_rad_s,w3_rad_s,c1,c2,c3,singular";

inline constexpr std::string_view kSweepCsvHeader =
    "value,sector_empty,x_mm,y_mm,theta2_origin_deg,theta2_shifted_deg,"
    "half_width_deg,window_total_deg,threshold_deg";

// Fixed-point text with `digits` decimals; "-0.000" is printed as "0.000".
std::string FormatFixed(double value, int digits = 3);

// Spring compression, centre shift, limit points and sector angles (both
// reference centres) at the configured analysis inclination.
std::string SectorReport(const ScenarioConfig& config);
std::string SectorSvg(const ScenarioConfig& config);

std::string WindowReport(const ScenarioConfig& config);

MotionPlan PlanScenario(const ScenarioConfig& config);
std::string PlanCsv(const MotionPlan& plan);

// Plans and runs the configured network.
SimResult SimulateScenario(const ScenarioConfig& config);

std::string TrajectoryCsv(const TrajectoryLog& log);
// Throws IoError naming the offending line on malformed input, and on a log
// without records.
TrajectoryLog ParseTrajectoryCsv(std::string_view text);

// Inner and outer angular velocity against time. Intervals where the two
// have opposite signs are shaded.
std::string AngularVelocitySvg(const TrajectoryLog& log);

// Config key for a sweep parameter; accepts any numeric config key and the
// aliases `inclination` and `rprime`. Throws ConfigError otherwise.
std::string ResolveSweepParameter(std::string_view name);

// Inclusive range; the end point is included when it lies on the grid.
std::vector<double> SweepValues(double from, double to, double step);

std::string SweepCsv(const ScenarioConfig& config, std::string_view parameter,
                     const std::vector<double>& values);

}  // namespace pipecrawl

#endif  // PIPECRAWL_COMMANDS_H_
