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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "pipecrawl/errors.h"

namespace pipecrawl {
namespace {

constexpr std::array<double, 3> kPhases{0.0, 120.0, 240.0};

// Smallest-denominator fraction within `tol` of `x`.
std::pair<long, long> Rational(double x, double tol) {
  for (long d = 1; d <= 1000; ++d) {
    const long n = std::lround(x * d);
    if (std::abs(x - static_cast<double>(n) / d) < tol) return {n, d};
  }
  return {0, 0};
}

TEST(ElbowRatioTest, FifteenNineNine) {
  const auto r = ElbowSpeedRatios(247.5, 90.0, kPhases);
  EXPECT_EQ(Rational(r[1] / r[0], 1e-12), std::make_pair(3L, 5L));
  EXPECT_EQ(Rational(r[2] / r[0], 1e-12), std::make_pair(3L, 5L));
  EXPECT_NEAR(r[0] * 15.0, 15.0, 1e-12);
  EXPECT_NEAR(r[1] * 15.0, 9.0, 1e-12);
  EXPECT_NEAR(r[2] * 15.0, 9.0, 1e-12);
}

TEST(ElbowRatioTest, OtherExamples) {
  const auto centre = ElbowSpeedRatios(240.0, 0.0, kPhases);
  EXPECT_DOUBLE_EQ(centre[0], 1.0);
  EXPECT_DOUBLE_EQ(centre[1], 1.0);
  EXPECT_DOUBLE_EQ(centre[2], 1.0);
  const auto r = ElbowSpeedRatios(240.0, 80.0, kPhases);
  EXPECT_NEAR(r[1] * 8.0, 5.0, 1e-12);
  EXPECT_NEAR(r[2] * 8.0, 5.0, 1e-12);
  EXPECT_THROW(ElbowSpeedRatios(80.0, 80.0, kPhases), DomainError);
  EXPECT_THROW(ElbowSpeedRatios(50.0, 80.0, kPhases), DomainError);
}

TEST(ElbowRatioTest, ScaleInvariant) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> scale(1e-3, 1e3), phase(0, 360);
  const std::array<double, 3> phases{phase(rng), phase(rng), phase(rng)};
  const auto base = ElbowSpeedRatios(2.75, 1.0, phases);
  for (int i = 0; i < 100; ++i) {
    const double k = scale(rng);
    const auto scaled = ElbowSpeedRatios(2.75 * k, 1.0 * k, phases);
    for (int m = 0; m < 3; ++m) EXPECT_NEAR(scaled[m], base[m], 1e-12);
  }
}

TEST(ReorientationTest, Examples) {
  const auto noop = ReorientationCommand(0.0, 0.0, 1.0);
  EXPECT_EQ(noop.roll_delta_deg[0], 0.0);
  EXPECT_EQ(noop.parity, 1);

  const auto half = MakeRollCommand(0.0, 180.0, 1.0);
  EXPECT_EQ(half.parity, -1);
  EXPECT_DOUBLE_EQ(half.final_roll_deg, 180.0);

  const auto full = MakeRollCommand(0.0, 180.0, 1.0, 0.0, true);
  EXPECT_EQ(full.parity, 1);
  EXPECT_DOUBLE_EQ(full.final_roll_deg, 360.0);

  const auto to_zero = ReorientationCommand(60.0, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(to_zero.roll_delta_deg[0], -60.0);
  EXPECT_DOUBLE_EQ(to_zero.resulting_theta1_deg, 0.0);

  EXPECT_THROW(ReorientationCommand(0.0, 61.0, 1.0), DomainError);
  EXPECT_THROW(ReorientationCommand(0.0, -60.0, 1.0), DomainError);
}

TEST(ReorientationTest, ParityComposesOverSequences) {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> steps(1, 8), quarter(-8, 8);
  int checked = 0;
  for (int s = 0; s < 1000; ++s) {
    double roll = 0.0, theta1 = 0.0, sum = 0.0;
    int composed = 1, previous = 1;
    bool drivable = true;
    const int n = steps(rng);
    for (int k = 0; k < n; ++k) {
      // Multiples of 60 deg land on the no-motion line only at odd 90s,
      // which never happens; multiples of 45 sometimes do.
      const double delta = quarter(rng) * ((s % 2) ? 60.0 : 45.0);
      const auto cmd = MakeRollCommand(theta1, delta, 1.0, roll);
      if (cmd.parity == 0) {
        drivable = false;
        break;
      }
      composed *= cmd.parity * previous;
      previous = cmd.parity;
      roll = cmd.final_roll_deg;
      theta1 = cmd.resulting_theta1_deg;
      sum += delta;
    }
    if (!drivable) continue;
    ++checked;
    EXPECT_EQ(composed, DriveDirectionFactor(sum));
  }
  EXPECT_GT(checked, 600);
}

class TJunctionPlanTest : public ::testing::Test {
 protected:
  RobotParams params;
  ManeuverOptions options;
  PipeSegment tee = TJunctionPipe{80.0, BranchSide::kLeft};
  SingularitySector sector = ComputeSector(params, 45.0);
};

TEST_F(TJunctionPlanTest, PreferredOrientationNeedsNoReorient) {
  const auto plan =
      PlanTJunction(InitialState(params, 0.0), params, tee, sector, options);
  ASSERT_EQ(plan.phases.size(), 2u);
  EXPECT_EQ(plan.phases[0].kind, PhaseKind::kStraight);
  EXPECT_DOUBLE_EQ(plan.phases[0].length_mm, 40.0);
  EXPECT_EQ(plan.phases[1].kind, PhaseKind::kTJunctionTurn);
  EXPECT_NO_THROW(ValidatePlan(plan));
}

TEST_F(TJunctionPlanTest, WorstOrientationStartsWithReorient) {
  const auto plan =
      PlanTJunction(InitialState(params, 60.0), params, tee, sector, options);
  ASSERT_EQ(plan.phases.size(), 3u);
  EXPECT_EQ(plan.phases[0].kind, PhaseKind::kReorient);
  EXPECT_DOUBLE_EQ(plan.phases[0].target_theta1_deg, 0.0);
  for (double v : plan.phases[0].speed_mm_s) EXPECT_EQ(v, 0.0);
}

TEST_F(TJunctionPlanTest, TurnSpeedSigns) {
  for (double theta1 : {0.0, 60.0, -30.0}) {
    const auto plan = PlanTJunction(InitialState(params, theta1), params, tee,
                                    sector, options);
    const Phase& turn = plan.phases.back();
    EXPECT_LT(turn.speed_mm_s[0], 0.0);
    EXPECT_GT(turn.speed_mm_s[1], 0.0);
    EXPECT_GT(turn.speed_mm_s[2], 0.0);
    for (const Phase& p : plan.phases) {
      for (double v : p.speed_mm_s) {
        EXPECT_LE(std::abs(v), params.drive_speed_mm_s + 1e-12);
      }
    }
  }
}

TEST_F(TJunctionPlanTest, ReversedRollNegatesCommands) {
  auto state = InitialState(params, 0.0, 180.0);
  const auto plan = PlanTJunction(state, params, tee, sector, options);
  const Phase& turn = plan.phases.back();
  EXPECT_EQ(turn.parity, -1);
  EXPECT_GT(turn.speed_mm_s[0], 0.0);
  EXPECT_LT(turn.speed_mm_s[1], 0.0);
  EXPECT_NO_THROW(ValidatePlan(plan));
}

TEST_F(TJunctionPlanTest, ClosedWindowIsInfeasible) {
  SingularitySector wide;
  wide.empty = false;
  wide.sector_angle_deg = 125.0;
  EXPECT_THROW(
      PlanTJunction(InitialState(params, 0.0), params, tee, wide, options),
      PlanInfeasibleError);
}

TEST(PlanNetworkTest, PhasesCarryThreeCommands) {
  const RobotParams params;
  std::vector<PipeSegment> network{StraightPipe{300, 80},
                                   ElbowPipe{220, 90, 80},
                                   TJunctionPipe{80, BranchSide::kRight}};
  ManeuverOptions options;
  const auto plan =
      PlanNetwork(network, params, InitialState(params, 60.0), options);
  ASSERT_GE(plan.phases.size(), 4u);
  for (const Phase& p : plan.phases) {
    EXPECT_EQ(p.speed_mm_s.size(), 3u);
    EXPECT_EQ(p.roll_delta_deg.size(), 3u);
  }
  EXPECT_EQ(plan.phases[1].kind, PhaseKind::kElbowTurn);
  EXPECT_NO_THROW(ValidatePlan(plan));
}

TEST(PlanNetworkTest, InitialRollOnNoMotionLineIsInfeasible) {
  const RobotParams params;
  std::vector<PipeSegment> network{StraightPipe{300, 80}};
  ManeuverOptions options;
  options.initial_roll_deg = 90.0;
  EXPECT_THROW(PlanNetwork(network, params, InitialState(params, 0.0), options),
               PlanInfeasibleError);
}

}  // namespace
}  // namespace pipecrawl
