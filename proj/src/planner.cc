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

#include "pipecrawl/planner.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "pipecrawl/errors.h"

namespace pipecrawl {
namespace {

int RequireDrivableParity(double roll_deg) {
  const int parity = DriveDirectionFactor(roll_deg);
  if (parity == 0) {
    throw PlanInfeasibleError("modules are rolled onto the no-motion line (" +
                              std::to_string(roll_deg) + " deg)");
  }
  return parity;
}

std::array<double, kModuleCount> Uniform(double speed) {
  return {speed, speed, speed};
}

Phase MakeReorientPhase(const RollCommand& cmd, const ManeuverOptions& options,
                        std::size_t segment_index) {
  if (!(options.reorient_rate_deg_s > 0.0)) {
    throw DomainError("reorient rate must be positive");
  }
  Phase phase;
  phase.kind = PhaseKind::kReorient;
  phase.segment_index = segment_index;
  phase.roll_delta_deg = cmd.roll_delta_deg;
  phase.duration_s = std::abs(cmd.roll_delta_deg[0]) / options.reorient_rate_deg_s;
  phase.target_theta1_deg = cmd.resulting_theta1_deg;
  phase.parity = cmd.parity;
  return phase;
}

Phase MakeStraightPhase(double length_mm, double speed, int parity,
                        std::size_t segment_index) {
  Phase phase;
  phase.kind = PhaseKind::kStraight;
  phase.segment_index = segment_index;
  phase.length_mm = length_mm;
  phase.speed_mm_s = Uniform(speed * parity);
  phase.parity = parity;
  return phase;
}

double CurrentRoll(const RobotState& state) { return state.modules[0].roll_deg; }

}  // namespace

std::string_view PhaseKindName(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::kStraight:
      return "straight";
    case PhaseKind::kReorient:
      return "reorient";
    case PhaseKind::kElbowTurn:
      return "elbow_turn";
    case PhaseKind::kTJunctionTurn:
      return "t_junction_turn";
  }
  return "unknown";
}

std::array<double, kModuleCount> ElbowSpeedRatios(
    double bend_radius_mm, double contact_radius_mm,
    const std::array<double, kModuleCount>& module_phases_deg) {
  if (!(contact_radius_mm >= 0.0)) {
    throw DomainError("contact radius must be non-negative");
  }
  if (!(bend_radius_mm > contact_radius_mm)) {
    throw DomainError("bend radius must exceed the module contact radius");
  }
  std::array<double, kModuleCount> rho{};
  for (int i = 0; i < kModuleCount; ++i) {
    rho[i] = bend_radius_mm +
             contact_radius_mm * std::cos(DegToRad(module_phases_deg[i]));
  }
  const double largest = *std::max_element(rho.begin(), rho.end());
  for (double& r : rho) r /= largest;
  return rho;
}

RollCommand MakeRollCommand(double current_theta1_deg, double roll_delta_deg,
                            double roll_ratio, double current_roll_deg,
                            bool prefer_full_turns) {
  if (!(roll_ratio > 0.0)) throw DomainError("roll ratio must be positive");
  double final_roll = current_roll_deg + roll_delta_deg;
  if (prefer_full_turns && DriveDirectionFactor(final_roll) < 0) {
    final_roll = roll_delta_deg >= 0.0
                     ? std::ceil(final_roll / 360.0) * 360.0
                     : std::floor(final_roll / 360.0) * 360.0;
  }
  const double delta = final_roll - current_roll_deg;
  RollCommand cmd;
  cmd.roll_delta_deg = Uniform(delta);
  cmd.final_roll_deg = final_roll;
  cmd.resulting_theta1_deg =
      NormalizeTheta1(current_theta1_deg + delta * roll_ratio);
  cmd.parity = DriveDirectionFactor(final_roll);
  return cmd;
}

RollCommand ReorientationCommand(double current_theta1_deg,
                                 double target_theta1_deg, double roll_ratio,
                                 double current_roll_deg,
                                 bool prefer_full_turns) {
  if (!(target_theta1_deg > -60.0 && target_theta1_deg <= 60.0)) {
    throw DomainError("target theta1 must lie in (-60, 60] degrees");
  }
  if (!(roll_ratio > 0.0)) throw DomainError("roll ratio must be positive");
  return MakeRollCommand(current_theta1_deg,
                         (target_theta1_deg - current_theta1_deg) / roll_ratio,
                         roll_ratio, current_roll_deg, prefer_full_turns);
}

RobotState ApplyPhaseOrientation(const RobotState& state, const Phase& phase,
                                 const RobotParams& params) {
  RobotState out = state;
  if (phase.kind != PhaseKind::kReorient) return out;
  out.theta1_deg = NormalizeTheta1(state.theta1_deg +
                                   phase.roll_delta_deg[0] * params.roll_ratio);
  const auto directions = ModuleDirectionsDeg(out.theta1_deg);
  for (int i = 0; i < kModuleCount; ++i) {
    out.modules[i].roll_deg += phase.roll_delta_deg[i];
    out.modules[i].angular_position_deg = directions[i];
  }
  return out;
}

MotionPlan PlanTJunction(const RobotState& state, const RobotParams& params,
                         const PipeSegment& junction,
                         const SingularitySector& sector,
                         const ManeuverOptions& options,
                         std::size_t segment_index) {
  const auto* tee = std::get_if<TJunctionPipe>(&junction);
  if (tee == nullptr) throw DomainError("segment is not a T-junction");

  const OrientationWindow window = ComputeOrientationWindow(sector);
  if (!window.unconstrained && window.half_width_deg <= 0.0) {
    throw PlanInfeasibleError(
        "singularity sector leaves no admissible orientation");
  }

  MotionPlan plan;
  RobotState current = state;
  if (!options.suppress_reorient && !window.Admits(current.theta1_deg)) {
    const RollCommand cmd =
        ReorientationCommand(current.theta1_deg, 0.0, params.roll_ratio,
                             CurrentRoll(current), options.prefer_full_turns);
    plan.phases.push_back(MakeReorientPhase(cmd, options, segment_index));
    current = ApplyPhaseOrientation(current, plan.phases.back(), params);
  }

  const int parity = RequireDrivableParity(CurrentRoll(current));
  const double approach = params.pipe_radius_mm * options.start_fraction;
  if (approach > 0.0) {
    plan.phases.push_back(MakeStraightPhase(approach, params.drive_speed_mm_s,
                                            parity, segment_index));
  }

  Phase turn;
  turn.kind = PhaseKind::kTJunctionTurn;
  turn.segment_index = segment_index;
  turn.path_model = options.path_model;
  turn.turn_radius_mm = TJunctionTurnRadius(
      params.pipe_radius_mm, options.start_fraction, params.module_length_mm);
  turn.length_mm = TurnPathLength(options.path_model, turn.turn_radius_mm);
  turn.turn_angle_deg = tee->branch_side == BranchSide::kLeft ? 90.0 : -90.0;
  turn.parity = parity;
  // Speed magnitudes follow each module's path radius about the turn centre;
  // the inner module is always driven backward.
  const auto directions = ModuleDirectionsDeg(current.theta1_deg);
  std::array<double, kModuleCount> rho{};
  for (int i = 0; i < kModuleCount; ++i) {
    rho[i] = std::abs(turn.turn_radius_mm +
                      params.pipe_radius_mm *
                          std::cos(DegToRad(directions[i] - 90.0)));
  }
  const double largest = *std::max_element(rho.begin(), rho.end());
  for (int i = 0; i < kModuleCount; ++i) {
    const double sign = i == 0 ? -1.0 : 1.0;
    turn.speed_mm_s[i] =
        sign * params.drive_speed_mm_s * (rho[i] / largest) * parity;
  }
  plan.phases.push_back(turn);
  return plan;
}

MotionPlan PlanNetwork(std::span<const PipeSegment> network,
                       const RobotParams& params, const RobotState& initial,
                       const ManeuverOptions& options) {
  Validate(params);
  ValidateNetwork(network);
  if (network.empty()) throw ConfigError("network has no segments", "network");

  MotionPlan plan;
  RobotState current = initial;
  auto append = [&](const Phase& phase) {
    plan.phases.push_back(phase);
    current = ApplyPhaseOrientation(current, phase, params);
  };

  if (options.initial_roll_deg != 0.0) {
    append(MakeReorientPhase(
        MakeRollCommand(current.theta1_deg, options.initial_roll_deg,
                        params.roll_ratio, CurrentRoll(current),
                        options.prefer_full_turns),
        options, 0));
  }

  for (std::size_t i = 0; i < network.size(); ++i) {
    const PipeSegment& segment = network[i];
    if (const auto* straight = std::get_if<StraightPipe>(&segment)) {
      append(MakeStraightPhase(straight->length_mm, params.drive_speed_mm_s,
                               RequireDrivableParity(CurrentRoll(current)), i));
    } else if (const auto* elbow = std::get_if<ElbowPipe>(&segment)) {
      const int parity = RequireDrivableParity(CurrentRoll(current));
      const auto directions = ModuleDirectionsDeg(current.theta1_deg);
      std::array<double, kModuleCount> phases{};
      for (int m = 0; m < kModuleCount; ++m) phases[m] = directions[m] - 90.0;
      const auto factors = ElbowSpeedRatios(elbow->bend_radius_mm,
                                            params.pipe_radius_mm, phases);
      Phase phase;
      phase.kind = PhaseKind::kElbowTurn;
      phase.segment_index = i;
      phase.turn_radius_mm = elbow->bend_radius_mm;
      phase.turn_angle_deg = elbow->bend_angle_deg;
      phase.length_mm = elbow->bend_radius_mm * DegToRad(elbow->bend_angle_deg);
      phase.parity = parity;
      for (int m = 0; m < kModuleCount; ++m) {
        phase.speed_mm_s[m] = params.drive_speed_mm_s * factors[m] * parity;
      }
      append(phase);
    } else {
      const SingularitySector sector =
          ComputeSector(params, options.analysis_inclination_deg);
      for (const Phase& phase :
           PlanTJunction(current, params, segment, sector, options, i).phases) {
        append(phase);
      }
    }
  }
  return plan;
}

void ValidatePlan(const MotionPlan& plan) {
  for (std::size_t i = 0; i < plan.phases.size(); ++i) {
    const Phase& p = plan.phases[i];
    const std::string where = "phase " + std::to_string(i);
    if (p.kind == PhaseKind::kReorient) {
      if (!(p.duration_s >= 0.0)) throw ConfigError("negative duration", where);
      for (double v : p.speed_mm_s) {
        if (v != 0.0) throw ConfigError("reorient phase must not drive", where);
      }
      continue;
    }
    if (!(p.length_mm > 0.0) || !std::isfinite(p.length_mm)) {
      throw ConfigError("drive phase needs a positive length", where);
    }
    if (p.kind == PhaseKind::kTJunctionTurn) {
      const double inner = p.speed_mm_s[0] * p.parity;
      if (!(inner < 0.0) || !(p.speed_mm_s[1] * p.parity > 0.0) ||
          !(p.speed_mm_s[2] * p.parity > 0.0)) {
        throw ConfigError(
            "T-junction turn needs the inner module backward and both outer "
            "modules forward",
            where);
      }
    }
  }
}

}  // namespace pipecrawl
