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

#include "pipecrawl/commands.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "pipecrawl/errors.h"
#include "pipecrawl/scenario.h"

namespace pipecrawl {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

ScenarioConfig TJunction(bool suppress) {
  ScenarioConfig c;
  c.network = {StraightPipe{300, 80}, TJunctionPipe{80, BranchSide::kLeft}};
  c.initial_theta1_deg = 60.0;
  c.maneuver.suppress_reorient = suppress;
  return c;
}

TEST(SectorCommandTest, Defaults) {
  EXPECT_EQ(SectorReport(ScenarioConfig{}),
            "inclination_deg = 45.000\n"
            "spring_compression_mm = 4.000\n"
            "center_shift_mm = 1.000\n"
            "left_point_mm = -67.678, 60.327\n"
            "right_point_mm = 67.678, 60.327\n"
            "theta2_origin_deg = 96.574\n"
            "theta2_shifted_deg = 97.524\n"
            "window_half_width_deg = 11.713\n"
            "threshold_inclination_deg = 28.464\n");
}

TEST(SectorCommandTest, LevelSectionIsEmpty) {
  ScenarioConfig c;
  c.sim.analysis_inclination_deg = 0.0;
  EXPECT_NE(SectorReport(c).find("sector empty - no singularity"),
            std::string::npos);
}

TEST(SectorCommandTest, SixtyDegreesMatchesOracle) {
  ScenarioConfig c;
  c.sim.analysis_inclination_deg = 60.0;
  const auto report = SectorReport(c);
  EXPECT_NE(report.find("right_point_mm = 76.165, 48.948"), std::string::npos);
  EXPECT_NE(report.find("theta2_origin_deg = 114.546"), std::string::npos);
  EXPECT_NE(report.find("window_half_width_deg = 2.727"), std::string::npos);
}

TEST(SectorCommandTest, SvgHasParts) {
  const auto svg = SectorSvg(ScenarioConfig{});
  for (const char* part : {"<svg", "pipe-section", "robot-circle",
                           "class=\"sector\"", "class=\"module\"", "</svg>"}) {
    EXPECT_NE(svg.find(part), std::string::npos) << part;
  }
}

TEST(WindowCommandTest, Report) {
  const auto report = WindowReport(ScenarioConfig{});
  EXPECT_NE(report.find("half_width_deg = 11.713"), std::string::npos);
  EXPECT_NE(report.find("window_total_deg = 23.426"), std::string::npos);
  ScenarioConfig level;
  level.sim.analysis_inclination_deg = 10.0;
  EXPECT_NE(WindowReport(level).find("unconstrained"), std::string::npos);
}

TEST(PlanCommandTest, ReorientFirstForWorstOrientation) {
  const auto lines = Lines(PlanCsv(PlanScenario(TJunction(false))));
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(Fields(lines[2])[1], "reorient");
  EXPECT_EQ(Fields(lines[4])[1], "t_junction_turn");
}

TEST(SimulateCommandTest, StraightCsv) {
  const auto csv = TrajectoryCsv(SimulateScenario(ScenarioConfig{}).log);
  const auto lines = Lines(csv);
  EXPECT_EQ(lines.front(), kTrajectoryCsvHeader);
  EXPECT_EQ(lines.size(), 502u);
  EXPECT_EQ(Fields(lines.back())[0], "5.00");
  EXPECT_EQ(Fields(lines[1])[0], "0.00");
}

TEST(SimulateCommandTest, TimeDecimalsFollowStep) {
  ScenarioConfig c;
  c.sim.dt_s = 0.005;
  const auto lines = Lines(TrajectoryCsv(SimulateScenario(c).log));
  EXPECT_EQ(Fields(lines[2])[0], "0.005");
  EXPECT_EQ(Fields(lines.back())[0], "5.000");
}

TEST(SimulateCommandTest, SingularColumn) {
  auto column = [](const ScenarioConfig& c) {
    int ones = 0;
    const auto lines = Lines(TrajectoryCsv(SimulateScenario(c).log));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto f = Fields(lines[i]);
      EXPECT_EQ(f.size(), 15u);
      ones += f[14] == "1";
    }
    return ones;
  };
  EXPECT_EQ(column(TJunction(false)), 0);
  EXPECT_GE(column(TJunction(true)), 1);
}

TEST(SimulateCommandTest, CsvRoundTrip) {
  for (bool suppress : {false, true}) {
    const auto log = SimulateScenario(TJunction(suppress)).log;
    const auto csv = TrajectoryCsv(log);
    const auto parsed = ParseTrajectoryCsv(csv);
    ASSERT_EQ(parsed.records.size(), log.records.size());
    EXPECT_EQ(TrajectoryCsv(parsed), csv);
    EXPECT_NO_THROW(AngularVelocitySvg(parsed));
  }
}

TEST(PlotCommandTest, MalformedCsvNamesLine) {
  const std::string header(kTrajectoryCsvHeader);
  auto message = [](const std::string& text) -> std::string {
    try {
      ParseTrajectoryCsv(text);
    } catch (const IoError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message("").find("line 1"), std::string::npos);
  EXPECT_NE(message("a,b\n").find("line 1"), std::string::npos);
  EXPECT_NE(message(header + "\n").find("no records"), std::string::npos);
  const std::string row = "0.00,0,0,0,0,1,1,1,1,1,1,1,1,1,0\n";
  EXPECT_NE(message(header + "\n" + row + "1,2,3\n").find("line 3"),
            std::string::npos);
  EXPECT_NE(message(header + "\n" + row + row).find("line 3"),
            std::string::npos);
  EXPECT_NE(message(header + "\n" + "0.00,0,0,0,0,1,1,1,1,1,1,2,1,1,0\n")
                .find("line 2"),
            std::string::npos);
}

TEST(PlotCommandTest, TurnLogShowsOppositeWindow) {
  const auto svg = AngularVelocitySvg(SimulateScenario(TJunction(false)).log);
  EXPECT_NE(svg.find("opposite-window"), std::string::npos);
  EXPECT_NE(svg.find("series-inner"), std::string::npos);
  EXPECT_NE(svg.find("series-outer"), std::string::npos);
}

TEST(PlotCommandTest, StraightLogSeriesOverlap) {
  const auto svg = AngularVelocitySvg(SimulateScenario(ScenarioConfig{}).log);
  EXPECT_EQ(svg.find("opposite-window"), std::string::npos);
  auto points = [&](const std::string& cls) {
    const auto at = svg.find("series-" + cls);
    const auto start = svg.find("points=\"", at);
    return svg.substr(start, svg.find('"', start + 8) - start);
  };
  EXPECT_EQ(points("inner"), points("outer"));
}

TEST(SweepCommandTest, InclinationMonotone) {
  const auto values = SweepValues(30, 80, 5);
  ASSERT_EQ(values.size(), 11u);
  const auto lines = Lines(SweepCsv(ScenarioConfig{}, "inclination", values));
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], kSweepCsvHeader);
  double previous = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double theta2 = std::stod(Fields(lines[i])[4]);
    EXPECT_GE(theta2, previous);
    previous = theta2;
  }
}

TEST(SweepCommandTest, SingleValueMatchesSector) {
  const auto lines =
      Lines(SweepCsv(ScenarioConfig{}, "inclination", {45.0}));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], "45.000,0,67.678,60.327,96.574,97.524,11.713,23.426,28.464");
  const auto report =
      SectorReport(ScenarioConfig{}) + WindowReport(ScenarioConfig{});
  for (const auto& f : Fields(lines[1])) {
    if (f == "0" || f == "45.000") continue;
    EXPECT_NE(report.find(f), std::string::npos) << f;
  }
}

TEST(SweepCommandTest, WindowWidensWithFreeRadius) {
  const auto lines = Lines(SweepCsv(ScenarioConfig{}, "rprime",
                                    SweepValues(85, 95, 1)));
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(Fields(lines[1])[6], "0.000");
  EXPECT_EQ(Fields(lines[6])[6], "11.713");
  EXPECT_EQ(Fields(lines[11])[6], "21.037");
  double previous = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double half = std::stod(Fields(lines[i])[6]);
    EXPECT_GE(half, previous);
    previous = half;
  }
}

TEST(SweepCommandTest, EmptySectorRowsUseNa) {
  const auto lines = Lines(SweepCsv(ScenarioConfig{}, "inclination", {0.0}));
  EXPECT_EQ(Fields(lines[1])[1], "1");
  EXPECT_EQ(Fields(lines[1])[2], "NA");
}

TEST(SweepCommandTest, UnknownParameter) {
  EXPECT_THROW(ResolveSweepParameter("colour"), ConfigError);
  EXPECT_EQ(ResolveSweepParameter("rprime"), "robot.free_radius_mm");
  EXPECT_THROW(SweepValues(5, 1, 1), ConfigError);
}

}  // namespace
}  // namespace pipecrawl
