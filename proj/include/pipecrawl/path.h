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

#ifndef PIPECRAWL_PATH_H_
#define PIPECRAWL_PATH_H_

#include <string_view>

namespace pipecrawl {

// Simplified centre path through a T-junction.
//   kArc:      quarter circle joining the approach axis to the branch axis.
//   kDiagonal: straight chord, equal x and y displacement per unit progress.
enum class PathModel { kArc, kDiagonal };

std::string_view PathModelName(PathModel model);
// Throws DomainError for an unknown name.
PathModel ParsePathModel(std::string_view name);

// Pose relative to the turn start, approach axis along +x, turning toward +y.
struct PathPose {
  double x_mm = 0.0;
  double y_mm = 0.0;
  double heading_deg = 0.0;
};

// Radius of the simplified turn: the head (half a module length ahead of the
// centre) has penetrated pipe_radius * start_fraction into the junction
// opening when the turn starts, and the turn ends on the branch axis.
double TJunctionTurnRadius(double pipe_radius_mm, double start_fraction,
                           double module_length_mm);

double TurnPathLength(PathModel model, double turn_radius_mm);

// Heading is 90 * u in both models. Throws DomainError for u outside [0, 1].
PathPose SimplifiedPath(double u, PathModel model, double turn_radius_mm);

}  // namespace pipecrawl

#endif  // PIPECRAWL_PATH_H_
