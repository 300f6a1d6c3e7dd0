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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <system_error>

#include "pipecrawl/errors.h"
#include "pipecrawl/singularity.h"

namespace pipecrawl {
namespace {

std::string ReferenceName(SectorReference reference) {
  return reference == SectorReference::kOrigin ? "origin" : "shifted";
}

int TimeDigits(double dt) {
  int digits = 2;
  double scaled = dt * 100.0;
  while (digits < 9 && std::abs(scaled - std::round(scaled)) > 1e-9) {
    ++digits;
    scaled *= 10.0;
  }
  return digits;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

std::string Fixed(double v) { return FormatFixed(v, 3); }

struct SectorSummary {
  double compression_mm = 0.0;
  double shift_mm = 0.0;
  SingularitySector origin;
  SingularitySector shifted;
  OrientationWindow window;
  std::optional<double> threshold_deg;
};

SectorSummary Summarize(const ScenarioConfig& config) {
  SectorSummary s;
  const RobotParams& p = config.robot;
  s.compression_mm =
      InnerSpringCompression(p.weight_n, p.spring_k_n_per_mm, p.friction_mu);
  s.shift_mm = CenterShift(p.precompression_mm, s.compression_mm);
  const CrossSectionEllipse ellipse =
      CrossSection(p.pipe_radius_mm, config.sim.analysis_inclination_deg);
  s.origin = ComputeSector(ellipse, p.free_radius_mm, s.shift_mm,
                           SectorReference::kOrigin);
  s.shifted = ComputeSector(ellipse, p.free_radius_mm, s.shift_mm,
                            SectorReference::kShiftedCenter);
  s.window = ComputeOrientationWindow(
      config.sim.reference == SectorReference::kOrigin ? s.origin : s.shifted);
  s.threshold_deg = SingularityThresholdInclination(p, s.shift_mm);
  return s;
}

}  // namespace

std::string FormatFixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  std::string out(buffer);
  if (out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string SectorReport(const ScenarioConfig& config) {
  const SectorSummary s = Summarize(config);
  std::ostringstream out;
  out << "inclination_deg = " << Fixed(config.sim.analysis_inclination_deg)
      << "\n"
      << "spring_compression_mm = " << Fixed(s.compression_mm) << "\n"
      << "center_shift_mm = " << Fixed(s.shift_mm) << "\n";
  if (s.origin.empty) {
    out << "sector empty - no singularity\n";
  } else {
    out << "left_point_mm = " << Fixed(s.origin.left_point.x) << ", "
        << Fixed(s.origin.left_point.y) << "\n"
        << "right_point_mm = " << Fixed(s.origin.right_point.x) << ", "
        << Fixed(s.origin.right_point.y) << "\n"
        << "theta2_origin_deg = " << Fixed(s.origin.sector_angle_deg) << "\n"
        << "theta2_shifted_deg = " << Fixed(s.shifted.sector_angle_deg) << "\n"
        << "window_half_width_deg = " << Fixed(s.window.half_width_deg) << "\n";
  }
  out << "threshold_inclination_deg = "
      << (s.threshold_deg ? Fixed(*s.threshold_deg) : std::string("never"))
      << "\n";
  return out.str();
}

std::string WindowReport(const ScenarioConfig& config) {
  const SectorSummary s = Summarize(config);
  std::ostringstream out;
  out << "inclination_deg = " << Fixed(config.sim.analysis_inclination_deg)
      << "\n"
      << "sector_reference = " << ReferenceName(config.sim.reference) << "\n";
  if (s.window.unconstrained) {
    out << "window = unconstrained (sector empty)\n";
    return out.str();
  }
  const std::string half = Fixed(s.window.half_width_deg);
  out << "half_width_deg = " << half << "\n"
      << "window_total_deg = " << Fixed(s.window.total_deg()) << "\n"
      << "window_deg = [" << Fixed(-s.window.half_width_deg) << ", " << half
      << "]\n";
  return out.str();
}

std::string SectorSvg(const ScenarioConfig& config) {
  const SectorSummary s = Summarize(config);
  const RobotParams& p = config.robot;
  const CrossSectionEllipse ellipse =
      CrossSection(p.pipe_radius_mm, config.sim.analysis_inclination_deg);
  const double extent =
      std::max(ellipse.semi_major_mm(), p.free_radius_mm + s.shift_mm) * 1.15;
  const double size = 2.0 * extent;
  std::ostringstream out;
  // SVG y grows downward; the group flips it so +y points up.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" "
         "height=\"600\" viewBox=\""
      << Fixed(-extent) << " " << Fixed(-extent) << " " << Fixed(size) << " "
      << Fixed(size) << "\">\n"
      << "<title>Singularity sector at " << Fixed(ellipse.inclination_deg())
      << " deg</title>\n"
      << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.6\">\n"
      << "<ellipse class=\"pipe-section\" cx=\"0\" cy=\"0\" rx=\""
      << Fixed(ellipse.semi_minor_mm()) << "\" ry=\""
      << Fixed(ellipse.semi_major_mm()) << "\" stroke=\"black\"/>\n"
      << "<circle class=\"robot-circle\" cx=\"0\" cy=\"" << Fixed(s.shift_mm)
      << "\" r=\"" << Fixed(p.free_radius_mm) << "\" stroke=\"red\"/>\n";
  const SingularitySector& sector =
      config.sim.reference == SectorReference::kOrigin ? s.origin : s.shifted;
  if (!sector.empty) {
    const Point2 c = sector.reference_center;
    out << "<path class=\"sector\" fill=\"gold\" fill-opacity=\"0.4\" "
           "stroke=\"goldenrod\" d=\"M "
        << Fixed(c.x) << " " << Fixed(c.y) << " L "
        << Fixed(sector.right_point.x) << " " << Fixed(sector.right_point.y);
    // Trace the upper ellipse arc between the limit points.
    const double t0 = std::atan2(sector.right_point.y / ellipse.semi_major_mm(),
                                 sector.right_point.x / ellipse.semi_minor_mm());
    const double t1 = kPi - t0;
    for (int i = 1; i <= 48; ++i) {
      const double t = t0 + (t1 - t0) * i / 48.0;
      out << " L " << Fixed(ellipse.semi_minor_mm() * std::cos(t)) << " "
          << Fixed(ellipse.semi_major_mm() * std::sin(t));
    }
    out << " Z\"/>\n";
  }
  const auto contacts =
      ModuleContacts(config.initial_theta1_deg, p,
                     config.sim.analysis_inclination_deg, s.shift_mm,
                     config.sim.reference);
  const auto directions =
      ModuleDirectionsDeg(NormalizeTheta1(config.initial_theta1_deg));
  for (int i = 0; i < kModuleCount; ++i) {
    const double a = DegToRad(directions[i]);
    const double x = p.free_radius_mm * std::cos(a);
    const double y = s.shift_mm + p.free_radius_mm * std::sin(a);
    out << "<line class=\"module-arm\" x1=\"0\" y1=\"" << Fixed(s.shift_mm)
        << "\" x2=\"" << Fixed(x) << "\" y2=\"" << Fixed(y)
        << "\" stroke=\"gray\"/>\n"
        << "<circle class=\"module\" cx=\"" << Fixed(x) << "\" cy=\""
        << Fixed(y) << "\" r=\"4\" fill=\""
        << (contacts[i] ? "steelblue" : "crimson") << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

MotionPlan PlanScenario(const ScenarioConfig& config) {
  return PlanNetwork(config.network, config.robot, InitialRobotState(config),
                     EffectiveManeuver(config));
}

std::string PlanCsv(const MotionPlan& plan) {
  std::ostringstream out;
  out << "index,kind,segment,length_mm,duration_s,v1_mm_s,v2_mm_s,v3_mm_s,"
         "roll1_deg,roll2_deg,roll3_deg,target_theta1_deg,turn_radius_mm,"
         "turn_angle_deg,parity\n";
  for (std::size_t i = 0; i < plan.phases.size(); ++i) {
    const Phase& p = plan.phases[i];
    out << i << "," << PhaseKindName(p.kind) << "," << p.segment_index << ","
        << Fixed(p.length_mm) << "," << Fixed(p.duration_s);
    for (double v : p.speed_mm_s) out << "," << Fixed(v);
    for (double r : p.roll_delta_deg) out << "," << Fixed(r);
    out << "," << Fixed(p.target_theta1_deg) << "," << Fixed(p.turn_radius_mm)
        << "," << Fixed(p.turn_angle_deg) << "," << p.parity << "\n";
  }
  return out.str();
}

SimResult SimulateScenario(const ScenarioConfig& config) {
  return RunScenario(config.network, config.robot, PlanScenario(config),
                     config.sim, InitialRobotState(config));
}

std::string TrajectoryCsv(const TrajectoryLog& log) {
  const int t_digits = TimeDigits(log.dt_s);
  std::ostringstream out;
  out << kTrajectoryCsvHeader << "\n";
  for (const TrajectoryRecord& r : log.records) {
    out << FormatFixed(r.t_s, t_digits) << "," << Fixed(r.pose.x_mm) << ","
        << Fixed(r.pose.y_mm) << "," << Fixed(r.pose.heading_deg) << ","
        << Fixed(r.theta1_deg);
    for (double v : r.speed_mm_s) out << "," << Fixed(v);
    for (double w : r.omega_rad_s) out << "," << Fixed(w);
    for (bool c : r.contact) out << "," << (c ? 1 : 0);
    out << "," << (r.singular ? 1 : 0) << "\n";
  }
  return out.str();
}

TrajectoryLog ParseTrajectoryCsv(std::string_view text) {
  TrajectoryLog log;
  int line_number = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kTrajectoryCsvHeader) {
        throw IoError("line 1: unexpected header");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (fields.size() != 15) {
      throw IoError(where + "expected 15 fields, got " +
                    std::to_string(fields.size()));
    }
    std::array<double, 11> numbers{};
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      const auto f = fields[i];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(),
                                             numbers[i]);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
        throw IoError(where + "field " + std::to_string(i + 1) +
                      " is not a number");
      }
    }
    std::array<bool, 4> flags{};
    for (std::size_t i = 0; i < flags.size(); ++i) {
      const auto f = fields[11 + i];
      if (f != "0" && f != "1") {
        throw IoError(where + "field " + std::to_string(12 + i) +
                      " must be 0 or 1");
      }
      flags[i] = f == "1";
    }
    TrajectoryRecord r;
    r.t_s = numbers[0];
    r.pose = Pose{numbers[1], numbers[2], numbers[3]};
    r.theta1_deg = numbers[4];
    for (int i = 0; i < kModuleCount; ++i) {
      r.speed_mm_s[i] = numbers[5 + i];
      r.omega_rad_s[i] = numbers[8 + i];
      r.contact[i] = flags[i];
    }
    r.singular = flags[3];
    if (!log.records.empty() && !(r.t_s > log.records.back().t_s)) {
      throw IoError(where + "timestamps must increase");
    }
    log.records.push_back(r);
  }
  if (!header_seen) throw IoError("line 1: missing header");
  if (log.records.empty()) throw IoError("trajectory log has no records");
  if (log.records.size() > 1) {
    log.dt_s = log.records[1].t_s - log.records[0].t_s;
  }
  return log;
}

std::string AngularVelocitySvg(const TrajectoryLog& log) {
  const auto trace = AngularVelocityTrace(log);
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 60.0;
  const double t_max = std::max(trace.back().t_s, 1e-9);
  double w_max = 1e-9;
  for (const auto& s : trace) {
    w_max = std::max({w_max, std::abs(s.inner_rad_s), std::abs(s.outer_rad_s)});
  }
  w_max *= 1.1;
  auto px = [&](double t) {
    return kMargin + (kWidth - 2 * kMargin) * t / t_max;
  };
  auto py = [&](double w) {
    return kHeight / 2 - (kHeight / 2 - kMargin) * w / w_max;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n"
      << "<title>Angular velocity of inner and outer modules</title>\n";
  // Shade runs where the inner and outer modules turn in opposite senses.
  std::size_t i = 0;
  while (i < trace.size()) {
    if (trace[i].inner_rad_s * trace[i].outer_rad_s < 0.0) {
      std::size_t j = i;
      while (j + 1 < trace.size() &&
             trace[j + 1].inner_rad_s * trace[j + 1].outer_rad_s < 0.0) {
        ++j;
      }
      out << "<rect class=\"opposite-window\" x=\"" << Fixed(px(trace[i].t_s))
          << "\" y=\"" << Fixed(kMargin) << "\" width=\""
          << Fixed(std::max(px(trace[j].t_s) - px(trace[i].t_s), 1.0))
          << "\" height=\"" << Fixed(kHeight - 2 * kMargin)
          << "\" fill=\"khaki\" fill-opacity=\"0.5\" data-t0=\""
          << Fixed(trace[i].t_s) << "\" data-t1=\"" << Fixed(trace[j].t_s)
          << "\"/>\n";
      i = j + 1;
    } else {
      ++i;
    }
  }
  out << "<line class=\"axis\" x1=\"" << Fixed(kMargin) << "\" y1=\""
      << Fixed(py(0.0)) << "\" x2=\"" << Fixed(kWidth - kMargin) << "\" y2=\""
      << Fixed(py(0.0)) << "\" stroke=\"black\"/>\n"
      << "<line class=\"axis\" x1=\"" << Fixed(kMargin) << "\" y1=\""
      << Fixed(kMargin) << "\" x2=\"" << Fixed(kMargin) << "\" y2=\""
      << Fixed(kHeight - kMargin) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << Fixed(kWidth / 2) << "\" y=\""
      << Fixed(kHeight - 15) << "\">t (s), 0 to " << Fixed(t_max)
      << "</text>\n"
      << "<text x=\"5\" y=\"" << Fixed(kMargin - 20) << "\">omega (rad/s), max "
      << Fixed(w_max / 1.1) << "</text>\n";
  auto series = [&](const char* name, const char* color, auto value) {
    out << "<polyline class=\"series-" << name << "\" fill=\"none\" stroke=\""
        << color << "\" points=\"";
    for (std::size_t k = 0; k < trace.size(); ++k) {
      out << (k ? " " : "") << Fixed(px(trace[k].t_s)) << ","
          << Fixed(py(value(trace[k])));
    }
    out << "\"/>\n";
  };
  series("inner", "crimson", [](const auto& s) { return s.inner_rad_s; });
  series("outer", "steelblue", [](const auto& s) { return s.outer_rad_s; });
  out << "<text x=\"" << Fixed(kWidth - 150) << "\" y=\"30\" fill=\"crimson\">"
      << "inner</text>\n"
      << "<text x=\"" << Fixed(kWidth - 90) << "\" y=\"30\" "
      << "fill=\"steelblue\">outer</text>\n"
      << "</svg>\n";
  return out.str();
}

std::string ResolveSweepParameter(std::string_view name) {
  std::string key(name);
  if (name == "inclination") key = "sim.analysis_inclination_deg";
  if (name == "rprime") key = "robot.free_radius_mm";
  if (!IsNumericKey(key)) {
    throw ConfigError("unknown sweep parameter", std::string(name));
  }
  return key;
}

std::vector<double> SweepValues(double from, double to, double step) {
  if (!(step > 0.0) || !(to >= from)) {
    throw ConfigError("sweep needs step > 0 and to >= from", "sweep");
  }
  const auto count =
      static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (long i = 0; i < count; ++i) values.push_back(from + step * i);
  return values;
}

std::string SweepCsv(const ScenarioConfig& config, std::string_view parameter,
                     const std::vector<double>& values) {
  const std::string key = ResolveSweepParameter(parameter);
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (double value : values) {
    ScenarioConfig row = config;
    SetNumeric(row, key, value);
    const SectorSummary s = Summarize(row);
    out << Fixed(value) << "," << (s.origin.empty ? 1 : 0) << ",";
    if (s.origin.empty) {
      out << "NA,NA,NA,NA,NA,NA";
    } else {
      out << Fixed(s.origin.right_point.x) << ","
          << Fixed(s.origin.right_point.y) << ","
          << Fixed(s.origin.sector_angle_deg) << ","
          << Fixed(s.shifted.sector_angle_deg) << ","
          << Fixed(s.window.half_width_deg) << ","
          << Fixed(s.window.total_deg());
    }
    out << "," << (s.threshold_deg ? Fixed(*s.threshold_deg) : "NA") << "\n";
  }
  return out.str();
}

}  // namespace pipecrawl
