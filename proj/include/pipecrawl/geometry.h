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

#ifndef PIPECRAWL_GEOMETRY_H_
#define PIPECRAWL_GEOMETRY_H_

#include <span>
#include <variant>

namespace pipecrawl {

// Cross-section frame: origin on the pipe axis, x horizontal, y along the
// major axis of the inclined section, pointing away from the turn centre.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

constexpr double kPi = 3.14159265358979323846;

constexpr double DegToRad(double deg) { return deg * kPi / 180.0; }
constexpr double RadToDeg(double rad) { return rad * 180.0 / kPi; }

struct StraightPipe {
  double length_mm = 0.0;
  double radius_mm = 80.0;
};

struct ElbowPipe {
  double bend_radius_mm = 0.0;
  double bend_angle_deg = 90.0;
  double radius_mm = 80.0;
};

enum class BranchSide { kLeft, kRight };

struct TJunctionPipe {
  double radius_mm = 80.0;
  BranchSide branch_side = BranchSide::kLeft;
};

using PipeSegment = std::variant<StraightPipe, ElbowPipe, TJunctionPipe>;

double SegmentRadius(const PipeSegment& segment);

// Throws DomainError on non-positive dimensions or a bend angle outside
// (0, 180].
void ValidateSegment(const PipeSegment& segment);

// Every segment valid and all joints share one pipe radius.
void ValidateNetwork(std::span<const PipeSegment> network);

// Section of a cylinder of radius R by a plane inclined at theta to the
// cylinder's cross-sectional plane: x^2 + y^2 cos^2(theta) = R^2.
class CrossSectionEllipse {
 public:
  // Throws DomainError for R <= 0 or theta < 0, DegenerateSectionError for
  // theta >= 90 deg.
  CrossSectionEllipse(double pipe_radius_mm, double inclination_deg);

  double semi_minor_mm() const { return semi_minor_; }
  double semi_major_mm() const { return semi_major_; }
  double inclination_deg() const { return inclination_deg_; }
  double cos_squared() const { return cos_sq_; }

  // x^2 + y^2 cos^2 - R^2, normalised by R^2. Zero on the boundary,
  // negative inside.
  double RelativeResidual(Point2 p) const;
  bool StrictlyContains(Point2 p) const;

 private:
  double semi_minor_;
  double semi_major_;
  double inclination_deg_;
  double cos_sq_;
};

CrossSectionEllipse CrossSection(double pipe_radius_mm, double inclination_deg);

// sin(theta); 0 for the circular section.
double Eccentricity(const CrossSectionEllipse& ellipse);

// Positive distance from `center` to the ellipse boundary along the
// direction `direction_deg` (counter-clockwise from +x). Throws DomainError
// unless `center` is strictly inside.
double RayDistanceToEllipse(Point2 center, double direction_deg,
                            const CrossSectionEllipse& ellipse);

}  // namespace pipecrawl

#endif  // PIPECRAWL_GEOMETRY_H_
