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

// Command-line front end: singularity analysis, planning, simulation,
// parameter sweeps and figures.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pipecrawl/commands.h"
#include "pipecrawl/errors.h"
#include "pipecrawl/scenario.h"

namespace {

enum ExitCode {
  kOk = 0,
  kConfigError = 2,
  kStalled = 3,
  kInfeasible = 4,
  kIoError = 5,
};

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) {
    throw pipecrawl::IoError("cannot write " + path);
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pipecrawl::IoError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinematic analysis and simulation of a three-module in-pipe robot"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  app.add_option("--config", config_path, "Scenario file (key = value)");
  app.add_option("--set", overrides, "Override key=value, applied after --config");
  app.add_option("--out", out_path, "Output file (default stdout)");

  auto* sector = app.add_subcommand("sector", "Singularity sector report");
  std::string svg_path;
  sector->add_option("--svg", svg_path, "Also write the sector figure");

  app.add_subcommand("window", "Admissible orientation window");
  app.add_subcommand("plan", "Emit the maneuver plan as CSV");
  app.add_subcommand("simulate", "Run the scenario and emit the trajectory CSV");

  auto* sweep = app.add_subcommand("sweep", "Sector and window over a parameter range");
  std::string sweep_param;
  double from = 0.0, to = 0.0, step = 1.0;
  std::vector<double> values;
  sweep->add_option("--param", sweep_param,
                    "inclination, rprime, or any numeric config key")
      ->required();
  auto* from_opt = sweep->add_option("--from", from);
  auto* to_opt = sweep->add_option("--to", to);
  sweep->add_option("--step", step);
  auto* values_opt = sweep->add_option("--values", values, "Explicit values");
  from_opt->needs(to_opt);
  values_opt->excludes(from_opt);

  auto* plot = app.add_subcommand("plot", "Angular-velocity figure from a trajectory CSV");
  std::string log_path;
  plot->add_option("log", log_path, "Trajectory CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (plot->parsed()) {
      const auto log = pipecrawl::ParseTrajectoryCsv(ReadFile(log_path));
      Emit(pipecrawl::AngularVelocitySvg(log), out_path);
      return kOk;
    }

    const pipecrawl::ScenarioConfig config =
        config_path.empty() ? pipecrawl::ParseScenario("", overrides)
                            : pipecrawl::LoadScenario(config_path, overrides);

    if (sector->parsed()) {
      Emit(pipecrawl::SectorReport(config), out_path);
      if (!svg_path.empty()) Emit(pipecrawl::SectorSvg(config), svg_path);
    } else if (app.got_subcommand("window")) {
      Emit(pipecrawl::WindowReport(config), out_path);
    } else if (app.got_subcommand("plan")) {
      Emit(pipecrawl::PlanCsv(pipecrawl::PlanScenario(config)), out_path);
    } else if (app.got_subcommand("simulate")) {
      const auto result = pipecrawl::SimulateScenario(config);
      Emit(pipecrawl::TrajectoryCsv(result.log), out_path);
      if (result.status == pipecrawl::RunStatus::kStalled) {
        std::cerr << "stalled: " << result.message << "\n";
        return kStalled;
      }
    } else if (sweep->parsed()) {
      if (values.empty()) {
        if (from_opt->count() == 0) {
          throw pipecrawl::ConfigError("give --from/--to/--step or --values",
                                       "sweep");
        }
        values = pipecrawl::SweepValues(from, to, step);
      }
      Emit(pipecrawl::SweepCsv(config, sweep_param, values), out_path);
    }
  } catch (const pipecrawl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const pipecrawl::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const pipecrawl::StalledError& e) {
    std::cerr << "stalled: " << e.what() << "\n";
    return kStalled;
  } catch (const pipecrawl::PlanInfeasibleError& e) {
    std::cerr << "infeasible plan: " << e.what() << "\n";
    return kInfeasible;
  } catch (const pipecrawl::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}
