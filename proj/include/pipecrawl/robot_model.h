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

#ifndef PIPECRAWL_ROBOT_MODEL_H_
#define PIPECRAWL_ROBOT_MODEL_H_

#include <array>

namespace pipecrawl {

inline constexpr int kModuleCount = 3;
inline constexpr double kModuleSpacingDeg = 120.0;

// Static geometry and physics of the robot and the pipe it runs in.
struct RobotParams {
  double pipe_radius_mm = 80.0;
  double free_radius_mm = 90.0;     // robot radius with springs at free length
  double spring_k_n_per_mm = 0.5;   // per spring, four springs per module
  double precompression_mm = 5.0;   // straight-pipe spring compression
  double max_compression_mm = 10.0; // shaft-cap travel limit
  double weight_n = 7.0;
  double friction_mu = 0.23744;
  double drive_speed_mm_s = 100.0;
  double roll_ratio = 1.0;          // robot in-plane rotation per module roll
  double module_length_mm = 200.0;
};

// Throws DomainError when a constant is out of range.
void Validate(const RobotParams& params);

struct ModuleState {
  double angular_position_deg = 0.0;  // around the robot axis
  double roll_deg = 0.0;              // about the module's own axis
  double compression_mm = 0.0;
  double commanded_speed_mm_s = 0.0;
};

struct RobotState {
  double arc_position_mm = 0.0;  // progress within the active phase
  double heading_deg = 0.0;
  double theta1_deg = 0.0;       // inner module vs. the reference line
  std::array<ModuleState, kModuleCount> modules{};
};

// Maps an orientation onto (-60, 60]; the three modules make the robot
// symmetric under 120 degree rotations.
double NormalizeTheta1(double theta1_deg);

// Directions of the modules in the cross-section frame. Index 0 is the
// inner module, pointing at the turn centre (-y) when theta1 = 0; indices
// 1 and 2 are the outer modules flanking +y.
std::array<double, kModuleCount> ModuleDirectionsDeg(double theta1_deg);

// Straight-pipe state: modules pre-compressed, centred, all rolled by
// `roll_deg`.
RobotState InitialState(const RobotParams& params, double theta1_deg,
                        double roll_deg = 0.0);

// Compression of the inner module's four springs when it alone carries the
// robot through a turn: N (1 + mu) cos 45 = W and 4 K s = N.
double InnerSpringCompression(double weight_n, double spring_k_n_per_mm,
                              double friction_mu);

// Upward shift of the robot-geometry circle: the part of the pre-compression
// released by the inner springs.
double CenterShift(double precompression_mm, double turn_compression_mm);

// Shift for the given parameter set.
double TurnCenterShift(const RobotParams& params);

// Sign of translation produced by a module rolled by psi: +1, -1, or 0 on
// the no-motion line (psi = 90 or 270 degrees).
int DriveDirectionFactor(double roll_deg);

}  // namespace pipecrawl

#endif  // PIPECRAWL_ROBOT_MODEL_H_
