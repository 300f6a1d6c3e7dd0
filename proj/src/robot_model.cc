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

#include "pipecrawl/robot_model.h"

#include <cmath>
#include <string>

#include "pipecrawl/errors.h"
#include "pipecrawl/geometry.h"

namespace pipecrawl {
namespace {

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive");
  }
}

}  // namespace

void Validate(const RobotParams& p) {
  RequirePositive(p.pipe_radius_mm, "pipe_radius_mm");
  RequirePositive(p.free_radius_mm, "free_radius_mm");
  RequirePositive(p.spring_k_n_per_mm, "spring_k_n_per_mm");
  RequirePositive(p.precompression_mm, "precompression_mm");
  RequirePositive(p.max_compression_mm, "max_compression_mm");
  RequirePositive(p.weight_n, "weight_n");
  RequirePositive(p.drive_speed_mm_s, "drive_speed_mm_s");
  RequirePositive(p.roll_ratio, "roll_ratio");
  RequirePositive(p.module_length_mm, "module_length_mm");
  if (!(p.friction_mu >= 0.0) || !std::isfinite(p.friction_mu)) {
    throw DomainError("friction_mu must be non-negative");
  }
  if (!(p.free_radius_mm > p.pipe_radius_mm)) {
    throw DomainError("free_radius_mm must exceed pipe_radius_mm");
  }
  if (p.precompression_mm > p.max_compression_mm) {
    throw DomainError("precompression_mm exceeds max_compression_mm");
  }
}

double NormalizeTheta1(double theta1_deg) {
  double t = std::fmod(theta1_deg + 60.0, kModuleSpacingDeg);
  if (t <= 0.0) t += kModuleSpacingDeg;
  return t - 60.0;
}

std::array<double, kModuleCount> ModuleDirectionsDeg(double theta1_deg) {
  std::array<double, kModuleCount> out{};
  for (int i = 0; i < kModuleCount; ++i) {
    out[i] = -90.0 + theta1_deg + kModuleSpacingDeg * i;
  }
  return out;
}

RobotState InitialState(const RobotParams& params, double theta1_deg,
                        double roll_deg) {
  RobotState state;
  state.theta1_deg = NormalizeTheta1(theta1_deg);
  const auto directions = ModuleDirectionsDeg(state.theta1_deg);
  for (int i = 0; i < kModuleCount; ++i) {
    state.modules[i].angular_position_deg = directions[i];
    state.modules[i].roll_deg = roll_deg;
    state.modules[i].compression_mm = params.precompression_mm;
  }
  return state;
}

double InnerSpringCompression(double weight_n, double spring_k_n_per_mm,
                              double friction_mu) {
  if (!(spring_k_n_per_mm > 0.0)) {
    throw DomainError("spring stiffness must be positive");
  }
  if (!(friction_mu >= 0.0)) throw DomainError("friction must be >= 0");
  if (!(weight_n >= 0.0)) throw DomainError("weight must be >= 0");
  const double normal_force =
      weight_n / ((1.0 + friction_mu) * std::cos(DegToRad(45.0)));
  return normal_force / (4.0 * spring_k_n_per_mm);
}

double CenterShift(double precompression_mm, double turn_compression_mm) {
  return precompression_mm - turn_compression_mm;
}

double TurnCenterShift(const RobotParams& params) {
  return CenterShift(params.precompression_mm,
                     InnerSpringCompression(params.weight_n,
                                            params.spring_k_n_per_mm,
                                            params.friction_mu));
}

int DriveDirectionFactor(double roll_deg) {
  double psi = std::fmod(roll_deg, 360.0);
  if (psi < 0.0) psi += 360.0;
  if (psi == 90.0 || psi == 270.0) return 0;
  return (psi > 90.0 && psi < 270.0) ? -1 : 1;
}

}  // namespace pipecrawl
