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

#include "pipecrawl/singularity.h"

#include <algorithm>
#include <cmath>

#include "pipecrawl/errors.h"

namespace pipecrawl {

std::optional<std::pair<Point2, Point2>> EllipseCircleIntersections(
    const CrossSectionEllipse& ellipse, double circle_radius_mm,
    double shift_mm) {
  if (!(circle_radius_mm > 0.0)) {
    throw DomainError("robot circle radius must be positive");
  }
  if (!(shift_mm >= 0.0)) throw DomainError("centre shift must be >= 0");

  const double r = ellipse.semi_minor_mm();
  const double rp = circle_radius_mm;
  const double k = ellipse.cos_squared();
  // Subtracting the circle from the ellipse eliminates x:
  // (k - 1) y^2 + 2 shift y + (R'^2 - R^2 - shift^2) = 0.
  const double a = k - 1.0;
  const double b = 2.0 * shift_mm;
  const double c = rp * rp - r * r - shift_mm * shift_mm;

  std::array<double, 2> roots{};
  int root_count = 0;
  if (a == 0.0) {
    if (b != 0.0) roots[root_count++] = -c / b;
  } else {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (q != 0.0) {
        roots[root_count++] = q / a;
        roots[root_count++] = c / q;
      }
    }
  }

  std::optional<double> best_y;
  double best_x_sq = 0.0;
  for (int i = 0; i < root_count; ++i) {
    const double y = roots[i];
    const double dy = y - shift_mm;
    const double x_sq = rp * rp - dy * dy;
    if (!(y > 0.0) || x_sq < 0.0 || r * r - y * y * k < 0.0) continue;
    if (!best_y || y > *best_y) {
      best_y = y;
      best_x_sq = x_sq;
    }
  }
  if (!best_y) return std::nullopt;
  const double x = std::sqrt(best_x_sq);
  return std::make_pair(Point2{-x, *best_y}, Point2{x, *best_y});
}

Point2 ReferenceCenter(SectorReference reference, double shift_mm) {
  return reference == SectorReference::kOrigin ? Point2{0.0, 0.0}
                                               : Point2{0.0, shift_mm};
}

double SectorAngle(Point2 left, Point2 right, SectorReference reference,
                   double shift_mm) {
  const Point2 center = ReferenceCenter(reference, shift_mm);
  const double half_x = 0.5 * (std::abs(left.x) + std::abs(right.x));
  const double y = 0.5 * (left.y + right.y) - center.y;
  return 180.0 - 2.0 * RadToDeg(std::atan2(y, half_x));
}

double SectorAngle(const SingularitySector& sector) {
  if (sector.empty) throw EmptySectorError("singularity sector is empty");
  return SectorAngle(sector.left_point, sector.right_point, sector.reference,
                     sector.shift_mm);
}

SingularitySector ComputeSector(const CrossSectionEllipse& ellipse,
                                double circle_radius_mm, double shift_mm,
                                SectorReference reference) {
  SingularitySector sector;
  sector.reference = reference;
  sector.reference_center = ReferenceCenter(reference, shift_mm);
  sector.inclination_deg = ellipse.inclination_deg();
  sector.shift_mm = shift_mm;
  const auto points =
      EllipseCircleIntersections(ellipse, circle_radius_mm, shift_mm);
  if (!points) return sector;
  sector.empty = false;
  sector.left_point = points->first;
  sector.right_point = points->second;
  sector.sector_angle_deg = SectorAngle(sector);
  return sector;
}

SingularitySector ComputeSector(const RobotParams& params,
                                double inclination_deg,
                                SectorReference reference) {
  return ComputeSector(CrossSection(params.pipe_radius_mm, inclination_deg),
                       params.free_radius_mm, TurnCenterShift(params),
                       reference);
}

bool OrientationWindow::Admits(double theta1_deg) const {
  if (unconstrained) return true;
  return std::abs(NormalizeTheta1(theta1_deg)) <= half_width_deg;
}

OrientationWindow ComputeOrientationWindow(const SingularitySector& sector,
                                           double module_spacing_deg) {
  OrientationWindow window;
  if (sector.empty) {
    window.unconstrained = true;
    window.half_width_deg = 60.0;
    return window;
  }
  const double edge_elevation = 90.0 - 0.5 * sector.sector_angle_deg;
  const double outer_elevation = module_spacing_deg - 90.0;
  window.half_width_deg = std::max(0.0, edge_elevation - outer_elevation);
  return window;
}

double RayDistanceToCircle(Point2 origin, double direction_deg, Point2 center,
                           double radius) {
  const double dx = std::cos(DegToRad(direction_deg));
  const double dy = std::sin(DegToRad(direction_deg));
  const double ox = origin.x - center.x;
  const double oy = origin.y - center.y;
  const double b = ox * dx + oy * dy;
  const double c = ox * ox + oy * oy - radius * radius;
  if (c >= 0.0) throw DomainError("ray origin must lie inside the circle");
  return -b + std::sqrt(b * b - c);
}

std::array<bool, kModuleCount> ModuleContacts(double theta1_deg,
                                              const RobotParams& params,
                                              double inclination_deg,
                                              double shift_mm,
                                              SectorReference reference) {
  const CrossSectionEllipse ellipse =
      CrossSection(params.pipe_radius_mm, inclination_deg);
  const Point2 from = ReferenceCenter(reference, shift_mm);
  const Point2 robot_center{0.0, shift_mm};
  const auto directions = ModuleDirectionsDeg(NormalizeTheta1(theta1_deg));

  std::array<bool, kModuleCount> contact{};
  contact[0] = true;
  for (int i = 1; i < kModuleCount; ++i) {
    const double wall = RayDistanceToEllipse(from, directions[i], ellipse);
    const double reach =
        reference == SectorReference::kShiftedCenter
            ? params.free_radius_mm
            : RayDistanceToCircle(from, directions[i], robot_center,
                                  params.free_radius_mm);
    contact[i] = !(wall > reach);
  }
  return contact;
}

bool IsSingular(double theta1_deg, const RobotParams& params,
                double inclination_deg, double shift_mm,
                SectorReference reference) {
  const auto contact =
      ModuleContacts(theta1_deg, params, inclination_deg, shift_mm, reference);
  return std::find(contact.begin(), contact.end(), false) != contact.end();
}

std::optional<double> SingularityThresholdInclination(const RobotParams& params,
                                                      double shift_mm) {
  const double reach = params.free_radius_mm + shift_mm;
  if (!(reach > params.pipe_radius_mm)) return std::nullopt;
  return RadToDeg(std::acos(params.pipe_radius_mm / reach));
}

}  // namespace pipecrawl
