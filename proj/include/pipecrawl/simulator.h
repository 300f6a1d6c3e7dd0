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

#ifndef PIPECRAWL_SIMULATOR_H_
#define PIPECRAWL_SIMULATOR_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pipecrawl/geometry.h"
#include "pipecrawl/path.h"
#include "pipecrawl/planner.h"
#include "pipecrawl/robot_model.h"
#include "pipecrawl/singularity.h"

namespace pipecrawl {

struct SimConfig {
  double dt_s = 0.01;
  PathModel path_model = PathModel::kArc;
  // Section inclination at which the robot has left the straight pipe
  // behind it; steeper sections are still bridged by the straight section.
  double analysis_inclination_deg = 45.0;
  double wheel_radius_mm = 25.0;  // converts track speed to rad/s
  SectorReference reference = SectorReference::kOrigin;
};

void Validate(const SimConfig& config);

// World pose of the robot centre. Travel starts along +x; left turns are
// toward +y.
struct Pose {
  double x_mm = 0.0;
  double y_mm = 0.0;
  double heading_deg = 0.0;
};

struct TrajectoryRecord {
  double t_s = 0.0;
  Pose pose;
  double theta1_deg = 0.0;
  std::array<double, kModuleCount> speed_mm_s{};  // commanded, signed
  std::array<double, kModuleCount> omega_rad_s{};
  std::array<bool, kModuleCount> contact{true, true, true};
  bool singular = false;
  std::optional<PhaseKind> phase;  // unknown when read back from CSV
};

struct TrajectoryLog {
  double dt_s = 0.01;
  std::vector<TrajectoryRecord> records;
};

enum class RunStatus { kCompleted, kStalled };

struct SimResult {
  TrajectoryLog log;
  RunStatus status = RunStatus::kCompleted;
  std::string message;
};

// Where and how the active phase began.
struct PhaseStart {
  Pose pose;
  double theta1_deg = 0.0;
  std::array<double, kModuleCount> roll_deg{};
};

// Section inclination at a given heading change into a T-junction turn
// (90 deg at the start, 0 at the end), or nullopt while the section is
// steeper than the analysis inclination and the straight pipe behind still
// supports all three modules.
std::optional<double> TurnSectionInclination(double turn_heading_deg,
                                             double analysis_inclination_deg);

// Fraction of `phase` completed in `state`.
double PhaseProgress(const RobotState& state, const Phase& phase,
                     const PhaseStart& start);

std::array<bool, kModuleCount> PhaseContacts(const RobotState& state,
                                             const Phase& phase,
                                             const PhaseStart& start,
                                             const RobotParams& params,
                                             const SimConfig& config);

Pose PhasePose(const RobotState& state, const Phase& phase,
               const PhaseStart& start);

// Advances one time step. Drive phases move the centre by dt times the mean
// effective speed of the modules in contact; reorient phases roll the
// modules at standstill. Throws StalledError when motion is commanded but no
// contacting module translates.
RobotState Step(const RobotState& state, const Phase& phase,
                const PhaseStart& start, const RobotParams& params,
                const SimConfig& config);

// Throws ConfigError when a phase does not fit its network segment.
void CheckPlanAgainstNetwork(std::span<const PipeSegment> network,
                             const MotionPlan& plan, const SimConfig& config);

// Runs the plan from `initial` until completion or stall.
SimResult RunScenario(std::span<const PipeSegment> network,
                      const RobotParams& params, const MotionPlan& plan,
                      const SimConfig& config, const RobotState& initial);

struct AngularVelocitySample {
  double t_s = 0.0;
  double inner_rad_s = 0.0;
  double outer_rad_s = 0.0;  // mean of the two outer modules
};

// Throws DomainError on an empty log.
std::vector<AngularVelocitySample> AngularVelocityTrace(
    const TrajectoryLog& log);

}  // namespace pipecrawl

#endif  // PIPECRAWL_SIMULATOR_H_
