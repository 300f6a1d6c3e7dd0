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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "pipecrawl/errors.h"

namespace pipecrawl {
namespace {

TEST(CrossSectionTest, InclinedSectionStretchesMajorAxis) {
  const auto e = CrossSection(80.0, 45.0);
  EXPECT_NEAR(e.semi_major_mm(), 113.137, 5e-4);
  EXPECT_DOUBLE_EQ(e.semi_minor_mm(), 80.0);
  // (0, a) satisfies x^2 + y^2 cos^2 = R^2.
  EXPECT_NEAR(e.RelativeResidual({0.0, e.semi_major_mm()}), 0.0, 1e-12);
}

TEST(CrossSectionTest, ZeroInclinationIsCircle) {
  const auto e = CrossSection(80.0, 0.0);
  EXPECT_DOUBLE_EQ(e.semi_major_mm(), 80.0);
  EXPECT_DOUBLE_EQ(e.semi_minor_mm(), 80.0);
}

TEST(CrossSectionTest, SixtyDegrees) {
  EXPECT_NEAR(CrossSection(80.0, 60.0).semi_major_mm(), 160.0, 1e-9);
}

TEST(CrossSectionTest, RejectsDegenerateAndBadRadius) {
  EXPECT_THROW(CrossSection(80.0, 90.0), DegenerateSectionError);
  EXPECT_THROW(CrossSection(80.0, 120.0), DegenerateSectionError);
  EXPECT_THROW(CrossSection(0.0, 10.0), DomainError);
  EXPECT_THROW(CrossSection(-5.0, 10.0), DomainError);
  EXPECT_THROW(CrossSection(80.0, -1.0), DomainError);
}

TEST(CrossSectionTest, BoundaryPointsSatisfyConic) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> incl(0.0, 89.9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int i = 0; i < 1000; ++i) {
    const auto e = CrossSection(80.0, incl(rng));
    const double t = angle(rng);
    const Point2 p{e.semi_minor_mm() * std::cos(t),
                   e.semi_major_mm() * std::sin(t)};
    EXPECT_NEAR(e.RelativeResidual(p), 0.0, 1e-9);
    EXPECT_GE(e.semi_major_mm(), e.semi_minor_mm());
  }
}

TEST(EccentricityTest, Examples) {
  EXPECT_DOUBLE_EQ(Eccentricity(CrossSection(80.0, 0.0)), 0.0);
  EXPECT_NEAR(Eccentricity(CrossSection(80.0, 45.0)), 0.70711, 5e-6);
  EXPECT_NEAR(Eccentricity(CrossSection(80.0, 60.0)), 0.86603, 5e-6);
}

TEST(EccentricityTest, FallsAlongTurn) {
  // The section inclination falls from nearly 90 deg to 0 through a turn.
  double previous = 2.0;
  for (double incl = 89.99; incl >= 0.0; incl -= 0.37) {
    const double e = Eccentricity(CrossSection(80.0, incl));
    EXPECT_LE(e, previous);
    EXPECT_GE(e, 0.0);
    EXPECT_LT(e, 1.0);
    previous = e;
  }
}

TEST(RayDistanceTest, Examples) {
  const auto e = CrossSection(80.0, 45.0);
  EXPECT_NEAR(RayDistanceToEllipse({0, 0}, 90.0, e), 113.137, 5e-4);
  EXPECT_NEAR(RayDistanceToEllipse({0, 0}, 0.0, e), 80.0, 1e-9);
  EXPECT_NEAR(RayDistanceToEllipse({0, 1}, 90.0, e), 112.137, 5e-4);
}

TEST(RayDistanceTest, RejectsCenterOnOrOutside) {
  const auto e = CrossSection(80.0, 45.0);
  EXPECT_THROW(RayDistanceToEllipse({80.0, 0.0}, 0.0, e), DomainError);
  EXPECT_THROW(RayDistanceToEllipse({0.0, 200.0}, 0.0, e), DomainError);
}

TEST(RayDistanceTest, AgreesWithMarchingOracle) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> incl(0.0, 80.0);
  std::uniform_real_distribution<double> unit(-0.95, 0.95);
  std::uniform_real_distribution<double> dir(0.0, 360.0);
  for (int i = 0; i < 1000; ++i) {
    const double theta = incl(rng);
    const auto e = CrossSection(80.0, theta);
    // Centre drawn inside the ellipse by scaling a boundary-normalised point.
    const double s = std::abs(unit(rng));
    const double t = dir(rng) * kPi / 180.0;
    const Point2 c{s * e.semi_minor_mm() * std::cos(t),
                   s * e.semi_major_mm() * std::sin(t)};
    const double beta = dir(rng);
    const double exact = RayDistanceToEllipse(c, beta, e);
    const double marched = testing::MarchRayToEllipse(c, beta, 80.0, theta);
    ASSERT_NEAR(exact, marched, 1e-3)
        << "theta=" << theta << " beta=" << beta << " c=(" << c.x << ","
        << c.y << ")";
  }
}

TEST(NetworkTest, ValidatesSegmentsAndJoints) {
  std::vector<PipeSegment> ok{StraightPipe{500, 80}, ElbowPipe{220, 90, 80},
                              TJunctionPipe{80, BranchSide::kLeft}};
  EXPECT_NO_THROW(ValidateNetwork(ok));
  std::vector<PipeSegment> mismatch{StraightPipe{500, 80}, StraightPipe{100, 75}};
  EXPECT_THROW(ValidateNetwork(mismatch), DomainError);
  EXPECT_THROW(ValidateSegment(ElbowPipe{220, 0, 80}), DomainError);
  EXPECT_THROW(ValidateSegment(ElbowPipe{220, 181, 80}), DomainError);
  EXPECT_NO_THROW(ValidateSegment(ElbowPipe{220, 180, 80}));
  EXPECT_THROW(ValidateSegment(StraightPipe{0, 80}), DomainError);
}

}  // namespace
}  // namespace pipecrawl
