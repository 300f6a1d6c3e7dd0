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

#include "pipecrawl/geometry.h"

#include <cmath>
#include <string>

#include "pipecrawl/errors.h"

namespace pipecrawl {
namespace {

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

struct SegmentValidator {
  void operator()(const StraightPipe& s) const {
    RequirePositive(s.length_mm, "straight length");
    RequirePositive(s.radius_mm, "pipe radius");
  }
  void operator()(const ElbowPipe& s) const {
    RequirePositive(s.bend_radius_mm, "bend radius");
    RequirePositive(s.radius_mm, "pipe radius");
    if (!(s.bend_angle_deg > 0.0 && s.bend_angle_deg <= 180.0)) {
      throw DomainError("bend angle must lie in (0, 180] degrees");
    }
  }
  void operator()(const TJunctionPipe& s) const {
    RequirePositive(s.radius_mm, "pipe radius");
  }
};

}  // namespace

double SegmentRadius(const PipeSegment& segment) {
  return std::visit([](const auto& s) { return s.radius_mm; }, segment);
}

void ValidateSegment(const PipeSegment& segment) {
  std::visit(SegmentValidator{}, segment);
}

void ValidateNetwork(std::span<const PipeSegment> network) {
  for (std::size_t i = 0; i < network.size(); ++i) {
    ValidateSegment(network[i]);
    if (i > 0 && SegmentRadius(network[i]) != SegmentRadius(network[i - 1])) {
      throw DomainError("pipe radius changes at joint " + std::to_string(i));
    }
  }
}

CrossSectionEllipse::CrossSectionEllipse(double pipe_radius_mm,
                                         double inclination_deg) {
  RequirePositive(pipe_radius_mm, "pipe radius");
  if (!(inclination_deg >= 0.0)) {
    throw DomainError("inclination must be non-negative");
  }
  if (inclination_deg >= 90.0) {
    throw DegenerateSectionError(
        "inclination of 90 degrees or more gives a degenerate section");
  }
  const double c = std::cos(DegToRad(inclination_deg));
  semi_minor_ = pipe_radius_mm;
  semi_major_ = pipe_radius_mm / c;
  inclination_deg_ = inclination_deg;
  cos_sq_ = c * c;
}

double CrossSectionEllipse::RelativeResidual(Point2 p) const {
  const double r2 = semi_minor_ * semi_minor_;
  return (p.x * p.x + p.y * p.y * cos_sq_ - r2) / r2;
}

bool CrossSectionEllipse::StrictlyContains(Point2 p) const {
  return RelativeResidual(p) < 0.0;
}

CrossSectionEllipse CrossSection(double pipe_radius_mm,
                                 double inclination_deg) {
  return CrossSectionEllipse(pipe_radius_mm, inclination_deg);
}

double Eccentricity(const CrossSectionEllipse& ellipse) {
  return std::sin(DegToRad(ellipse.inclination_deg()));
}

double RayDistanceToEllipse(Point2 center, double direction_deg,
                            const CrossSectionEllipse& ellipse) {
  if (!ellipse.StrictlyContains(center)) {
    throw DomainError("ray origin must lie strictly inside the ellipse");
  }
  const double dx = std::cos(DegToRad(direction_deg));
  const double dy = std::sin(DegToRad(direction_deg));
  const double k = ellipse.cos_squared();
  const double r = ellipse.semi_minor_mm();
  // a t^2 + b t + c = 0 with c < 0, so the roots have opposite signs.
  const double a = dx * dx + k * dy * dy;
  const double b = 2.0 * (center.x * dx + k * center.y * dy);
  const double c = center.x * center.x + k * center.y * center.y - r * r;
  const double root = std::sqrt(b * b - 4.0 * a * c);
  if (b >= 0.0) return 2.0 * c / (-b - root);
  return (-b + root) / (2.0 * a);
}

}  // namespace pipecrawl
