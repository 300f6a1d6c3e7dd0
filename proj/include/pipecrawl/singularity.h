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

#ifndef PIPECRAWL_SINGULARITY_H_
#define PIPECRAWL_SINGULARITY_H_

#include <array>
#include <optional>
#include <utility>

#include "pipecrawl/geometry.h"
#include "pipecrawl/robot_model.h"

namespace pipecrawl {

// Where sector angles and module directions are measured from: the pipe
// axis, or the centre of the shifted robot circle (0, shift).
enum class SectorReference { kOrigin, kShiftedCenter };

// Angular region of an inclined section that a fully extended outer module
// cannot reach. Bounded by the upper intersections of the section ellipse
// with the robot circle x^2 + (y - shift)^2 = R'^2.
struct SingularitySector {
  bool empty = true;
  Point2 left_point;
  Point2 right_point;
  double sector_angle_deg = 0.0;  // meaningful only when !empty
  SectorReference reference = SectorReference::kOrigin;
  Point2 reference_center;
  double inclination_deg = 0.0;
  double shift_mm = 0.0;
};

// Upper intersection pair (left, right) of the section ellipse and the
// shifted robot circle, or nullopt when the circle stays clear of the
// upper wall. Throws DomainError for R' <= 0 or shift < 0.
std::optional<std::pair<Point2, Point2>> EllipseCircleIntersections(
    const CrossSectionEllipse& ellipse, double circle_radius_mm,
    double shift_mm);

Point2 ReferenceCenter(SectorReference reference, double shift_mm);

// 180 - 2 atan2(y_ref, |x|) for a symmetric pair of limit points.
double SectorAngle(Point2 left, Point2 right, SectorReference reference,
                   double shift_mm);
// Throws EmptySectorError on an empty sector.
double SectorAngle(const SingularitySector& sector);

SingularitySector ComputeSector(
    const CrossSectionEllipse& ellipse, double circle_radius_mm,
    double shift_mm, SectorReference reference = SectorReference::kOrigin);

// Sector for the parameter set at `inclination_deg`, shift from the spring
// model.
SingularitySector ComputeSector(
    const RobotParams& params, double inclination_deg,
    SectorReference reference = SectorReference::kOrigin);

struct OrientationWindow {
  bool unconstrained = false;  // empty sector: any theta1 in (-60, 60]
  double half_width_deg = 0.0;
  double total_deg() const { return 2.0 * half_width_deg; }
  bool Admits(double theta1_deg) const;
};

// theta1 band around the preferred orientation in which no outer module
// enters the sector. The outer modules sit at elevation spacing - 90; the
// sector edge at 90 - theta2 / 2.
OrientationWindow ComputeOrientationWindow(
    const SingularitySector& sector, double module_spacing_deg = kModuleSpacingDeg);

// Contact of each module with the wall at the given section. The inner
// module (index 0) carries the weight and is always in contact. An outer
// module whose direction, measured at the reference point, reaches the
// robot circle before the wall has lost contact.
std::array<bool, kModuleCount> ModuleContacts(
    double theta1_deg, const RobotParams& params, double inclination_deg,
    double shift_mm, SectorReference reference = SectorReference::kOrigin);

bool IsSingular(double theta1_deg, const RobotParams& params,
                double inclination_deg, double shift_mm,
                SectorReference reference = SectorReference::kOrigin);

// Smallest inclination with a non-empty sector: tangency of the circle top
// with the ellipse, acos(R / (R' + shift)). nullopt when never singular.
std::optional<double> SingularityThresholdInclination(const RobotParams& params,
                                                      double shift_mm);

// Distance from `origin` along `direction_deg` to the circle of radius
// `radius` centred at `center`; `origin` must be inside the circle.
double RayDistanceToCircle(Point2 origin, double direction_deg, Point2 center,
                           double radius);

}  // namespace pipecrawl

#endif  // PIPECRAWL_SINGULARITY_H_
