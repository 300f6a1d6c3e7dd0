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

#include "pipecrawl/path.h"

#include <cmath>
#include <string>

#include "pipecrawl/errors.h"
#include "pipecrawl/geometry.h"

namespace pipecrawl {

std::string_view PathModelName(PathModel model) {
  return model == PathModel::kArc ? "arc" : "diagonal";
}

PathModel ParsePathModel(std::string_view name) {
  if (name == "arc") return PathModel::kArc;
  if (name == "diagonal") return PathModel::kDiagonal;
  throw DomainError("unknown path model '" + std::string(name) +
                    "' (expected arc or diagonal)");
}

double TJunctionTurnRadius(double pipe_radius_mm, double start_fraction,
                           double module_length_mm) {
  if (!(pipe_radius_mm > 0.0) || !(module_length_mm > 0.0)) {
    throw DomainError("pipe radius and module length must be positive");
  }
  if (!(start_fraction >= 0.0 && start_fraction <= 1.0)) {
    throw DomainError("start_fraction must lie in [0, 1]");
  }
  // The opening spans [-R, R] along the approach axis around the branch
  // axis; the centre trails the head by half a module length.
  return pipe_radius_mm * (1.0 - start_fraction) + 0.5 * module_length_mm;
}

double TurnPathLength(PathModel model, double turn_radius_mm) {
  return model == PathModel::kArc ? 0.5 * kPi * turn_radius_mm
                                  : std::sqrt(2.0) * turn_radius_mm;
}

PathPose SimplifiedPath(double u, PathModel model, double turn_radius_mm) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("path progress must lie in [0, 1]");
  }
  PathPose pose;
  pose.heading_deg = 90.0 * u;
  if (model == PathModel::kArc) {
    const double phi = DegToRad(pose.heading_deg);
    pose.x_mm = turn_radius_mm * std::sin(phi);
    pose.y_mm = turn_radius_mm * (1.0 - std::cos(phi));
  } else {
    pose.x_mm = turn_radius_mm * u;
    pose.y_mm = turn_radius_mm * u;
  }
  return pose;
}

}  // namespace pipecrawl
