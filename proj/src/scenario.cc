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

#include "pipecrawl/scenario.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

#include "pipecrawl/errors.h"

namespace pipecrawl {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    const auto end = s.find_first_of(" \t", start);
    out.push_back(s.substr(start, end == std::string_view::npos
                                      ? std::string_view::npos
                                      : end - start));
    pos = end == std::string_view::npos ? s.size() : end;
  }
  return out;
}

double ParseNumber(std::string_view text, const std::string& key, int line) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(value)) {
    throw ConfigError("expected a number, got '" + std::string(text) + "'", key,
                      line);
  }
  return value;
}

bool ParseBool(std::string_view text, const std::string& key, int line) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("expected true or false, got '" + std::string(text) + "'",
                    key, line);
}

using Setter =
    std::function<void(ScenarioConfig&, std::string_view, const std::string&, int)>;

Setter Number(double ScenarioConfig::*field) {
  return [field](ScenarioConfig& c, std::string_view v, const std::string& k,
                 int line) { c.*field = ParseNumber(v, k, line); };
}

template <typename Section>
Setter Number(Section ScenarioConfig::*section, double Section::*field) {
  return [section, field](ScenarioConfig& c, std::string_view v,
                          const std::string& k, int line) {
    (c.*section).*field = ParseNumber(v, k, line);
  };
}

Setter Flag(bool ManeuverOptions::*field) {
  return [field](ScenarioConfig& c, std::string_view v, const std::string& k,
                 int line) { c.maneuver.*field = ParseBool(v, k, line); };
}

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"robot.pipe_radius_mm", Number(&ScenarioConfig::robot, &RobotParams::pipe_radius_mm)},
      {"robot.free_radius_mm", Number(&ScenarioConfig::robot, &RobotParams::free_radius_mm)},
      {"robot.spring_k_n_per_mm", Number(&ScenarioConfig::robot, &RobotParams::spring_k_n_per_mm)},
      {"robot.precompression_mm", Number(&ScenarioConfig::robot, &RobotParams::precompression_mm)},
      {"robot.max_compression_mm", Number(&ScenarioConfig::robot, &RobotParams::max_compression_mm)},
      {"robot.weight_n", Number(&ScenarioConfig::robot, &RobotParams::weight_n)},
      {"robot.friction_mu", Number(&ScenarioConfig::robot, &RobotParams::friction_mu)},
      {"robot.drive_speed_mm_s", Number(&ScenarioConfig::robot, &RobotParams::drive_speed_mm_s)},
      {"robot.roll_ratio", Number(&ScenarioConfig::robot, &RobotParams::roll_ratio)},
      {"robot.module_length_mm", Number(&ScenarioConfig::robot, &RobotParams::module_length_mm)},
      {"sim.dt_s", Number(&ScenarioConfig::sim, &SimConfig::dt_s)},
      {"sim.analysis_inclination_deg", Number(&ScenarioConfig::sim, &SimConfig::analysis_inclination_deg)},
      {"sim.wheel_radius_mm", Number(&ScenarioConfig::sim, &SimConfig::wheel_radius_mm)},
      {"sim.path_model",
       [](ScenarioConfig& c, std::string_view v, const std::string& k, int line) {
         try {
           c.sim.path_model = ParsePathModel(v);
         } catch (const DomainError& e) {
           throw ConfigError(e.what(), k, line);
         }
       }},
      {"sim.sector_reference",
       [](ScenarioConfig& c, std::string_view v, const std::string& k, int line) {
         if (v == "origin") {
           c.sim.reference = SectorReference::kOrigin;
         } else if (v == "shifted") {
           c.sim.reference = SectorReference::kShiftedCenter;
         } else {
           throw ConfigError("expected origin or shifted", k, line);
         }
       }},
      {"maneuver.start_fraction", Number(&ScenarioConfig::maneuver, &ManeuverOptions::start_fraction)},
      {"maneuver.reorient_rate_deg_s", Number(&ScenarioConfig::maneuver, &ManeuverOptions::reorient_rate_deg_s)},
      {"maneuver.initial_roll_deg", Number(&ScenarioConfig::maneuver, &ManeuverOptions::initial_roll_deg)},
      {"maneuver.initial_theta1_deg", Number(&ScenarioConfig::initial_theta1_deg)},
      {"maneuver.prefer_full_turns", Flag(&ManeuverOptions::prefer_full_turns)},
      {"maneuver.suppress_reorient", Flag(&ManeuverOptions::suppress_reorient)},
  };
  return *setters;
}

struct NetworkEntry {
  std::string text;
  std::string key;
  int line = 0;
};

PipeSegment ParseSegment(const NetworkEntry& entry, double radius) {
  const auto tokens = Tokens(entry.text);
  auto number = [&](std::size_t i) {
    return ParseNumber(tokens[i], entry.key, entry.line);
  };
  if (!tokens.empty() && tokens[0] == "straight" && tokens.size() == 2) {
    return StraightPipe{number(1), radius};
  }
  if (!tokens.empty() && tokens[0] == "elbow" && tokens.size() == 3) {
    return ElbowPipe{number(1), number(2), radius};
  }
  if (!tokens.empty() && tokens[0] == "tjunction" && tokens.size() == 2) {
    if (tokens[1] == "left") return TJunctionPipe{radius, BranchSide::kLeft};
    if (tokens[1] == "right") return TJunctionPipe{radius, BranchSide::kRight};
  }
  throw ConfigError(
      "expected 'straight <length>', 'elbow <bend_radius> <angle>' or "
      "'tjunction <left|right>', got '" + entry.text + "'",
      entry.key, entry.line);
}

class Builder {
 public:
  void Apply(std::string_view raw_key, std::string_view raw_value, int line) {
    const std::string key(Trim(raw_key));
    const std::string_view value = Trim(raw_value);
    if (key.empty()) throw ConfigError("empty key", "", line);
    if (key.rfind("network.", 0) == 0) {
      const std::string index_text = key.substr(8);
      int index = -1;
      const auto [ptr, ec] = std::from_chars(
          index_text.data(), index_text.data() + index_text.size(), index);
      if (ec != std::errc() || ptr != index_text.data() + index_text.size() ||
          index < 0) {
        throw ConfigError("network keys are network.<index>", key, line);
      }
      network_[index] = NetworkEntry{std::string(value), key, line};
      return;
    }
    const auto it = Setters().find(key);
    if (it == Setters().end()) throw ConfigError("unknown key", key, line);
    it->second(config_, value, key, line);
  }

  ScenarioConfig Finish() {
    const double radius = config_.robot.pipe_radius_mm;
    if (!network_.empty()) {
      config_.network.clear();
      int expected = 0;
      for (const auto& [index, entry] : network_) {
        if (index != expected++) {
          throw ConfigError("network indices must run 0, 1, 2, ... without gaps",
                            entry.key, entry.line);
        }
        config_.network.push_back(ParseSegment(entry, radius));
      }
    } else {
      for (PipeSegment& s : config_.network) {
        std::visit([radius](auto& seg) { seg.radius_mm = radius; }, s);
      }
    }
    Revalidate(config_);
    return config_;
  }

  static void Revalidate(const ScenarioConfig& c) {
    auto wrap = [](const char* section, auto&& fn) {
      try {
        fn();
      } catch (const DomainError& e) {
        throw ConfigError(e.what(), section);
      }
    };
    wrap("robot", [&] { Validate(c.robot); });
    wrap("sim", [&] { Validate(c.sim); });
    wrap("network", [&] { ValidateNetwork(c.network); });
    if (c.network.empty()) throw ConfigError("no segments", "network");
    if (!(c.maneuver.start_fraction >= 0.0 && c.maneuver.start_fraction <= 1.0)) {
      throw ConfigError("must lie in [0, 1]", "maneuver.start_fraction");
    }
    if (!(c.maneuver.reorient_rate_deg_s > 0.0)) {
      throw ConfigError("must be positive", "maneuver.reorient_rate_deg_s");
    }
  }

 private:
  ScenarioConfig config_;
  std::map<int, NetworkEntry> network_;
};

}  // namespace

ScenarioConfig ParseScenario(std::string_view text,
                             std::span<const std::string> overrides) {
  Builder builder;
  std::map<std::string, int, std::less<>> seen;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", std::string(line), line_number);
    }
    const std::string key(Trim(line.substr(0, eq)));
    if (const auto [it, inserted] = seen.emplace(key, line_number); !inserted) {
      throw ConfigError("duplicate key (first set on line " +
                            std::to_string(it->second) + ")",
                        key, line_number);
    }
    builder.Apply(key, line.substr(eq + 1), line_number);
  }
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("override must be key=value", item);
    }
    builder.Apply(std::string_view(item).substr(0, eq),
                  std::string_view(item).substr(eq + 1), 0);
  }
  return builder.Finish();
}

ScenarioConfig LoadScenario(const std::filesystem::path& path,
                            std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseScenario(text.str(), overrides);
}

bool IsNumericKey(std::string_view key) {
  return Setters().contains(key) && key != "sim.path_model" &&
         key != "sim.sector_reference" && key != "maneuver.prefer_full_turns" &&
         key != "maneuver.suppress_reorient";
}

void SetNumeric(ScenarioConfig& config, std::string_view key, double value) {
  if (!IsNumericKey(key)) {
    throw ConfigError("not a numeric parameter", std::string(key));
  }
  const auto it = Setters().find(key);
  ScenarioConfig updated = config;
  std::ostringstream text;
  text.precision(17);
  text << value;
  it->second(updated, text.str(), std::string(key), 0);
  if (key == "robot.pipe_radius_mm") {
    for (PipeSegment& s : updated.network) {
      std::visit([value](auto& seg) { seg.radius_mm = value; }, s);
    }
  }
  Builder::Revalidate(updated);
  config = std::move(updated);
}

ManeuverOptions EffectiveManeuver(const ScenarioConfig& config) {
  ManeuverOptions options = config.maneuver;
  options.path_model = config.sim.path_model;
  options.analysis_inclination_deg = config.sim.analysis_inclination_deg;
  return options;
}

RobotState InitialRobotState(const ScenarioConfig& config) {
  return InitialState(config.robot, config.initial_theta1_deg);
}

}  // namespace pipecrawl
