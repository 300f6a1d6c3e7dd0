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

#ifndef PIPECRAWL_PLANNER_H_
#define PIPECRAWL_PLANNER_H_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pipecrawl/geometry.h"
#include "pipecrawl/path.h"
#include "pipecrawl/robot_model.h"
#include "pipecrawl/singularity.h"

namespace pipecrawl {

enum class PhaseKind { kStraight, kReorient, kElbowTurn, kTJunctionTurn };

std::string_view PhaseKindName(PhaseKind kind);

// One step of a maneuver. Drive phases (straight, elbow, T-junction turn)
// are bounded by path length; reorient phases by duration, at standstill.
struct Phase {
  PhaseKind kind = PhaseKind::kStraight;
  std::size_t segment_index = 0;
  double length_mm = 0.0;
  double duration_s = 0.0;
  std::array<double, kModuleCount> speed_mm_s{};  // commanded, signed
  std::array<double, kModuleCount> roll_delta_deg{};
  double target_theta1_deg = 0.0;  // reorient only
  double turn_radius_mm = 0.0;     // bend radius, or simplified-path radius
  double turn_angle_deg = 0.0;     // signed heading change over the phase
  PathModel path_model = PathModel::kArc;  // T-junction turn only
  int parity = 1;  // drive parity the commanded speeds were scaled by
};

struct MotionPlan {
  std::vector<Phase> phases;
};

struct ManeuverOptions {
  double start_fraction = 0.5;
  bool prefer_full_turns = false;
  bool suppress_reorient = false;
  double reorient_rate_deg_s = 120.0;  // module roll rate
  double initial_roll_deg = 0.0;       // standstill roll before driving
  PathModel path_model = PathModel::kArc;
  double analysis_inclination_deg = 45.0;
};

// Drive factors proportional to each module's path radius
// Rb + rc cos(phi_i), phi measured from the outward bend direction, scaled
// so the largest is 1. Throws DomainError unless Rb > rc >= 0.
std::array<double, kModuleCount> ElbowSpeedRatios(
    double bend_radius_mm, double contact_radius_mm,
    const std::array<double, kModuleCount>& module_phases_deg);

struct RollCommand {
  std::array<double, kModuleCount> roll_delta_deg{};
  double final_roll_deg = 0.0;
  double resulting_theta1_deg = 0.0;
  int parity = 1;  // DriveDirectionFactor(final_roll_deg)
};

// All modules roll together by `roll_delta_deg`, turning the robot by
// roll_delta * roll_ratio. With prefer_full_turns a roll that would leave
// the drive reversed is extended to the next multiple of 360 degrees.
RollCommand MakeRollCommand(double current_theta1_deg, double roll_delta_deg,
                            double roll_ratio, double current_roll_deg = 0.0,
                            bool prefer_full_turns = false);

// Roll that takes the robot from `current` to `target` orientation. Throws
// DomainError unless target lies in (-60, 60].
RollCommand ReorientationCommand(double current_theta1_deg,
                                 double target_theta1_deg, double roll_ratio,
                                 double current_roll_deg = 0.0,
                                 bool prefer_full_turns = false);

// Reorient (when theta1 lies outside the window and reorientation is not
// suppressed), straight approach into the opening, then the turn with the
// inner module driven backward. Throws PlanInfeasibleError when the sector
// leaves no admissible orientation or the modules sit on the no-motion line.
MotionPlan PlanTJunction(const RobotState& state, const RobotParams& params,
                         const PipeSegment& junction,
                         const SingularitySector& sector,
                         const ManeuverOptions& options,
                         std::size_t segment_index = 0);

// Phases for a whole network, starting from `initial`.
MotionPlan PlanNetwork(std::span<const PipeSegment> network,
                       const RobotParams& params, const RobotState& initial,
                       const ManeuverOptions& options);

// Orientation and roll after executing `phase` from `state`.
RobotState ApplyPhaseOrientation(const RobotState& state, const Phase& phase,
                                 const RobotParams& params);

// Throws ConfigError when a phase breaks the plan invariants.
void ValidatePlan(const MotionPlan& plan);

}  // namespace pipecrawl

#endif  // PIPECRAWL_PLANNER_H_
