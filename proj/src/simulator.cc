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

#include "pipecrawl/simulator.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pipecrawl/errors.h"

namespace pipecrawl {
namespace {

constexpr double kDoneTolerance = 1e-12;
constexpr long kMaxSteps = 10'000'000;

bool IsDrivePhase(const Phase& phase) {
  return phase.kind != PhaseKind::kReorient;
}

Pose Compose(const Pose& start, double local_x, double local_y,
             double heading_change_deg) {
  const double h = DegToRad(start.heading_deg);
  const double c = std::cos(h);
  const double s = std::sin(h);
  return Pose{start.x_mm + c * local_x - s * local_y,
              start.y_mm + s * local_x + c * local_y,
              start.heading_deg + heading_change_deg};
}

TrajectoryRecord MakeRecord(long step, const RobotState& state,
                            const Pose& pose, const Phase& phase,
                            const std::array<bool, kModuleCount>& contact,
                            const SimConfig& config) {
  TrajectoryRecord r;
  r.t_s = static_cast<double>(step) * config.dt_s;
  r.pose = pose;
  r.theta1_deg = state.theta1_deg;
  for (int i = 0; i < kModuleCount; ++i) {
    r.speed_mm_s[i] = state.modules[i].commanded_speed_mm_s;
    r.omega_rad_s[i] = r.speed_mm_s[i] / config.wheel_radius_mm;
  }
  r.contact = contact;
  r.singular = phase.kind == PhaseKind::kTJunctionTurn &&
               std::find(contact.begin(), contact.end(), false) !=
                   contact.end();
  r.phase = phase.kind;
  return r;
}

RobotState WithCommands(RobotState state, const Phase& phase) {
  for (int i = 0; i < kModuleCount; ++i) {
    state.modules[i].commanded_speed_mm_s = phase.speed_mm_s[i];
  }
  return state;
}

bool Near(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

void Validate(const SimConfig& config) {
  if (!(config.dt_s > 0.0) || !std::isfinite(config.dt_s)) {
    throw DomainError("dt must be positive");
  }
  if (!(config.wheel_radius_mm > 0.0)) {
    throw DomainError("wheel radius must be positive");
  }
  if (!(config.analysis_inclination_deg >= 0.0 &&
        config.analysis_inclination_deg < 90.0)) {
    throw DomainError("analysis inclination must lie in [0, 90) degrees");
  }
}

std::optional<double> TurnSectionInclination(double turn_heading_deg,
                                             double analysis_inclination_deg) {
  const double inclination = 90.0 - std::clamp(turn_heading_deg, 0.0, 90.0);
  if (inclination > analysis_inclination_deg) return std::nullopt;
  return inclination;
}

double PhaseProgress(const RobotState& state, const Phase& phase,
                     const PhaseStart& start) {
  if (phase.kind == PhaseKind::kReorient) {
    const double delta = phase.roll_delta_deg[0];
    if (delta == 0.0) return 1.0;
    return (state.modules[0].roll_deg - start.roll_deg[0]) / delta;
  }
  return std::clamp(state.arc_position_mm / phase.length_mm, 0.0, 1.0);
}

std::array<bool, kModuleCount> PhaseContacts(const RobotState& state,
                                             const Phase& phase,
                                             const PhaseStart& start,
                                             const RobotParams& params,
                                             const SimConfig& config) {
  std::array<bool, kModuleCount> all{true, true, true};
  if (phase.kind != PhaseKind::kTJunctionTurn) return all;
  const double u = PhaseProgress(state, phase, start);
  const auto inclination =
      TurnSectionInclination(90.0 * u, config.analysis_inclination_deg);
  if (!inclination) return all;
  return ModuleContacts(state.theta1_deg, params, *inclination,
                        TurnCenterShift(params), config.reference);
}

Pose PhasePose(const RobotState& state, const Phase& phase,
               const PhaseStart& start) {
  switch (phase.kind) {
    case PhaseKind::kReorient:
      return start.pose;
    case PhaseKind::kStraight:
      return Compose(start.pose, state.arc_position_mm, 0.0, 0.0);
    case PhaseKind::kElbowTurn: {
      const double side = phase.turn_angle_deg >= 0.0 ? 1.0 : -1.0;
      const double u = PhaseProgress(state, phase, start);
      const double phi = DegToRad(std::abs(phase.turn_angle_deg) * u);
      const double rb = phase.turn_radius_mm;
      return Compose(start.pose, rb * std::sin(phi),
                     side * rb * (1.0 - std::cos(phi)),
                     phase.turn_angle_deg * u);
    }
    case PhaseKind::kTJunctionTurn: {
      const double side = phase.turn_angle_deg >= 0.0 ? 1.0 : -1.0;
      const PathPose local =
          SimplifiedPath(PhaseProgress(state, phase, start), phase.path_model,
                         phase.turn_radius_mm);
      return Compose(start.pose, local.x_mm, side * local.y_mm,
                     side * local.heading_deg);
    }
  }
  return start.pose;
}

RobotState Step(const RobotState& state, const Phase& phase,
                const PhaseStart& start, const RobotParams& params,
                const SimConfig& config) {
  RobotState next = WithCommands(state, phase);

  if (phase.kind == PhaseKind::kReorient) {
    if (phase.duration_s <= 0.0) return next;
    const double fraction =
        std::min(1.0, PhaseProgress(state, phase, start) +
                          config.dt_s / phase.duration_s);
    for (int i = 0; i < kModuleCount; ++i) {
      next.modules[i].roll_deg =
          start.roll_deg[i] + phase.roll_delta_deg[i] * fraction;
    }
    next.theta1_deg = NormalizeTheta1(
        start.theta1_deg + phase.roll_delta_deg[0] * fraction * params.roll_ratio);
    const auto directions = ModuleDirectionsDeg(next.theta1_deg);
    for (int i = 0; i < kModuleCount; ++i) {
      next.modules[i].angular_position_deg = directions[i];
    }
    return next;
  }

  const auto contact = PhaseContacts(state, phase, start, params, config);
  double sum = 0.0;
  int contacting = 0;
  bool any_translation = false;
  bool any_command = false;
  for (int i = 0; i < kModuleCount; ++i) {
    const double v = phase.speed_mm_s[i];
    any_command = any_command || v != 0.0;
    if (!contact[i]) continue;
    const double effective = v * DriveDirectionFactor(state.modules[i].roll_deg);
    any_translation = any_translation || effective != 0.0;
    sum += effective;
    ++contacting;
  }
  if (any_command && !any_translation) {
    throw StalledError("no module in contact produces translation");
  }
  const double speed = contacting > 0 ? sum / contacting : 0.0;

  double arc = state.arc_position_mm + speed * config.dt_s;
  if (phase.length_mm - arc < 1e-9) arc = phase.length_mm;
  next.arc_position_mm = arc;
  next.heading_deg = PhasePose(next, phase, start).heading_deg;
  return next;
}

void CheckPlanAgainstNetwork(std::span<const PipeSegment> network,
                             const MotionPlan& plan, const SimConfig& config) {
  std::vector<double> straight_used(network.size(), 0.0);
  std::size_t last_segment = 0;
  for (std::size_t i = 0; i < plan.phases.size(); ++i) {
    const Phase& p = plan.phases[i];
    const std::string where = "phase " + std::to_string(i);
    if (p.segment_index >= network.size()) {
      throw ConfigError("refers to a segment beyond the network", where);
    }
    if (p.segment_index < last_segment) {
      throw ConfigError("segments visited out of order", where);
    }
    last_segment = p.segment_index;
    const PipeSegment& seg = network[p.segment_index];
    switch (p.kind) {
      case PhaseKind::kReorient:
        break;
      case PhaseKind::kStraight:
        if (const auto* s = std::get_if<StraightPipe>(&seg)) {
          straight_used[p.segment_index] += p.length_mm;
          if (straight_used[p.segment_index] > s->length_mm * (1.0 + 1e-12)) {
            throw ConfigError("straight phases exceed the segment length",
                              where);
          }
        } else if (!std::holds_alternative<TJunctionPipe>(seg)) {
          throw ConfigError("straight phase inside an elbow", where);
        }
        break;
      case PhaseKind::kElbowTurn: {
        const auto* e = std::get_if<ElbowPipe>(&seg);
        if (e == nullptr || !Near(e->bend_radius_mm, p.turn_radius_mm) ||
            !Near(e->bend_angle_deg, std::abs(p.turn_angle_deg))) {
          throw ConfigError("elbow phase does not match its segment", where);
        }
        break;
      }
      case PhaseKind::kTJunctionTurn: {
        const auto* t = std::get_if<TJunctionPipe>(&seg);
        if (t == nullptr) {
          throw ConfigError("T-junction turn outside a T-junction", where);
        }
        const double expected_sign =
            t->branch_side == BranchSide::kLeft ? 1.0 : -1.0;
        if (!Near(p.turn_angle_deg, 90.0 * expected_sign)) {
          throw ConfigError("turn direction does not match the branch side",
                            where);
        }
        if (p.path_model != config.path_model) {
          throw ConfigError("plan path model differs from the simulation's",
                            where);
        }
        if (!Near(p.length_mm, TurnPathLength(p.path_model, p.turn_radius_mm))) {
          throw ConfigError("turn length does not match its path model", where);
        }
        break;
      }
    }
  }
}

SimResult RunScenario(std::span<const PipeSegment> network,
                      const RobotParams& params, const MotionPlan& plan,
                      const SimConfig& config, const RobotState& initial) {
  Validate(params);
  Validate(config);
  ValidateNetwork(network);
  ValidatePlan(plan);
  CheckPlanAgainstNetwork(network, plan, config);

  SimResult result;
  result.log.dt_s = config.dt_s;
  if (plan.phases.empty()) return result;

  RobotState state = WithCommands(initial, plan.phases.front());
  state.arc_position_mm = 0.0;
  Pose pose;
  pose.heading_deg = initial.heading_deg;
  long step = 0;
  {
    const PhaseStart start{pose, state.theta1_deg,
                           {state.modules[0].roll_deg, state.modules[1].roll_deg,
                            state.modules[2].roll_deg}};
    result.log.records.push_back(MakeRecord(
        step, state, pose, plan.phases.front(),
        PhaseContacts(state, plan.phases.front(), start, params, config),
        config));
  }

  for (const Phase& phase : plan.phases) {
    state.arc_position_mm = 0.0;
    const PhaseStart start{pose, state.theta1_deg,
                           {state.modules[0].roll_deg, state.modules[1].roll_deg,
                            state.modules[2].roll_deg}};
    while (PhaseProgress(state, phase, start) < 1.0 - kDoneTolerance) {
      if (step >= kMaxSteps) {
        result.status = RunStatus::kStalled;
        result.message = "step limit reached";
        return result;
      }
      const double arc_before = state.arc_position_mm;
      try {
        state = Step(state, phase, start, params, config);
      } catch (const StalledError& e) {
        result.status = RunStatus::kStalled;
        result.message = e.what();
        return result;
      }
      ++step;
      pose = PhasePose(state, phase, start);
      result.log.records.push_back(MakeRecord(
          step, state, pose, phase,
          PhaseContacts(state, phase, start, params, config), config));
      if (IsDrivePhase(phase) && !(state.arc_position_mm > arc_before)) {
        result.status = RunStatus::kStalled;
        result.message = state.arc_position_mm < arc_before
                             ? "robot moves backward: drive parity of rolled "
                               "modules not compensated"
                             : "contacting modules cancel out, no net progress";
        return result;
      }
    }
  }
  return result;
}

std::vector<AngularVelocitySample> AngularVelocityTrace(
    const TrajectoryLog& log) {
  if (log.records.empty()) throw DomainError("trajectory log is empty");
  std::vector<AngularVelocitySample> out;
  out.reserve(log.records.size());
  for (const TrajectoryRecord& r : log.records) {
    out.push_back({r.t_s, r.omega_rad_s[0],
                   0.5 * (r.omega_rad_s[1] + r.omega_rad_s[2])});
  }
  return out;
}

}  // namespace pipecrawl
