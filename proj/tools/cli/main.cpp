// Copyright 2026 dephasim contributors
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

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/run.hpp"

namespace {

using dephasim::Error;
using dephasim::ErrorKind;
using namespace dephasim::cli;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;     // config / argument validation
constexpr int kExitNumerical = 3;  // state validation or convergence failures
constexpr int kExitIo = 4;         // file system failures

// Raw command-line values; only options the user actually passed are applied,
// so flags always win over the config file and preset.
struct CliOptions {
  std::string config_path;
  std::string preset;
  std::string state;
  std::string state_file;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int kind = 1;
  std::string sign;
  std::vector<std::string> orientations;
  double tau_max = 0.0;
  int steps = 0;
  std::string measure;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  std::int64_t trajectories = 0;
  double zero_threshold = 0.0;
  double invariance_tolerance = 0.0;
  double slope_threshold = 0.0;
  double horizon = 0.0;
  double confirm_window = 0.0;
  double plateau_time = 0.0;
};

void add_common_options(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Declarative JSON config file");
  cmd->add_option("--preset", opts.preset, "Named parameter bundle: fig1 | fig2 | fig3 | fig4");
  cmd->add_option("--state", opts.state,
                  "State family: alpha-gamma | isotropic | alpha-beta | schmidt | file");
  cmd->add_option("--state-file", opts.state_file, "Matrix file for --state file");
  cmd->add_option("--alpha", opts.alpha, "Family parameter alpha");
  cmd->add_option("--beta", opts.beta, "Family parameter beta");
  cmd->add_option("--gamma", opts.gamma, "Family parameter gamma");
  cmd->add_option("--kind", opts.kind, "Schmidt state kind, 1..6");
  cmd->add_option("--sign", opts.sign, "Schmidt relative sign: plus | minus");
  cmd->add_option("--orientation", opts.orientations,
                  "Field direction as \"x,y,z\" (repeatable; rescaled to unit length)");
  cmd->add_option("--tau-max", opts.tau_max, "End of the dimensionless time grid");
  cmd->add_option("--steps", opts.steps, "Number of grid points (endpoints included)");
  cmd->add_option("--measure", opts.measure, "negativity | lqu | both");
  cmd->add_option("--out", opts.out, "Output path (asymptote treats it as a prefix)");
  cmd->add_option("--format", opts.format, "Trajectory table format (csv)");
  cmd->add_option("--seed", opts.seed, "Seed for the stochastic oracle");
  cmd->add_option("--trajectories", opts.trajectories, "Monte Carlo trajectory count");
  cmd->add_option("--zero-threshold", opts.zero_threshold, "Classifier: zero cut");
  cmd->add_option("--invariance-tolerance", opts.invariance_tolerance,
                  "Classifier: max deviation for time-invariant");
  cmd->add_option("--slope-threshold", opts.slope_threshold, "Classifier: flatness cut");
  cmd->add_option("--horizon", opts.horizon, "Classifier: window length");
  cmd->add_option("--confirm-window", opts.confirm_window,
                  "Classifier: zero persistence window");
  cmd->add_option("--plateau-time", opts.plateau_time,
                  "Classifier: time at which the plateau value is evaluated");
}

RunConfig resolve_config(const CLI::App* cmd, const CliOptions& opts) {
  RunConfig config = default_config();
  if (cmd->count("--config")) apply_config_file(config, opts.config_path);
  if (cmd->count("--preset")) apply_preset(config, opts.preset);

  if (cmd->count("--state")) config.state.family = parse_family(opts.state);
  if (cmd->count("--state-file")) config.state.file = opts.state_file;
  if (cmd->count("--alpha")) config.state.alpha = opts.alpha;
  if (cmd->count("--beta")) config.state.beta = opts.beta;
  if (cmd->count("--gamma")) config.state.gamma = opts.gamma;
  if (cmd->count("--kind")) config.state.schmidt_kind = opts.kind;
  if (cmd->count("--sign")) {
    if (opts.sign == "plus") {
      config.state.schmidt_sign = dephasim::SchmidtSign::Plus;
    } else if (opts.sign == "minus") {
      config.state.schmidt_sign = dephasim::SchmidtSign::Minus;
    } else {
      throw Error(ErrorKind::ConfigError, "--sign must be plus or minus");
    }
  }
  if (cmd->count("--orientation")) {
    config.orientations.clear();
    for (const std::string& text : opts.orientations) {
      config.orientations.push_back(parse_orientation(text));
    }
  }
  if (cmd->count("--tau-max")) config.tau_max = opts.tau_max;
  if (cmd->count("--steps")) config.steps = opts.steps;
  if (cmd->count("--measure")) config.measures = parse_measure_selection(opts.measure);
  if (cmd->count("--out")) config.out = opts.out;
  if (cmd->count("--format")) config.format = opts.format;
  if (cmd->count("--seed")) config.seed = opts.seed;
  if (cmd->count("--trajectories")) config.trajectories = opts.trajectories;
  if (cmd->count("--zero-threshold")) config.classifier.zero_threshold = opts.zero_threshold;
  if (cmd->count("--invariance-tolerance"))
    config.classifier.invariance_tolerance = opts.invariance_tolerance;
  if (cmd->count("--slope-threshold"))
    config.classifier.slope_threshold = opts.slope_threshold;
  if (cmd->count("--horizon")) config.classifier.horizon = opts.horizon;
  if (cmd->count("--confirm-window"))
    config.classifier.confirm_window = opts.confirm_window;
  if (cmd->count("--plateau-time")) config.classifier.plateau_time = opts.plateau_time;
  return config;
}

int exit_code_for(const Error& error) {
  switch (error.kind()) {
    case ErrorKind::ConfigError:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::UnknownKind:
    case ErrorKind::InvalidArgument:
      return kExitConfig;
    case ErrorKind::IoError:
      return kExitIo;
    default:
      return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective dephasing of a qubit-qutrit pair: simulate trajectories, "
               "asymptotic states, regime classification and the Monte Carlo oracle"};
  app.require_subcommand(1);

  CliOptions opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Sample (tau, negativity, lqu) trajectories to a CSV dataset");
  CLI::App* asymptote = app.add_subcommand(
      "asymptote", "Write the infinite-time state, its zero pattern and correlations");
  CLI::App* classify = app.add_subcommand(
      "classify", "Label each (orientation, measure) trajectory with its regime");
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Compare the Monte Carlo unfolding against the exact propagator");
  for (CLI::App* cmd : {simulate, asymptote, classify, oracle}) {
    add_common_options(cmd, opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  CLI::App* cmd = app.get_subcommands().front();

  // Phase 1: resolve and validate the configuration (exit 2 on any failure,
  // including out-of-range family parameters).
  RunConfig config;
  try {
    config = resolve_config(cmd, opts);
    validate_config(config);
    (void)initial_state(config.state);
  } catch (const Error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return e.kind() == ErrorKind::IoError ? kExitIo : kExitConfig;
  }

  // Phase 2: run and write.
  try {
    std::vector<std::string> written;
    if (cmd == simulate) {
      written = execute_simulate(config);
    } else if (cmd == asymptote) {
      written = execute_asymptote(config);
    } else if (cmd == classify) {
      written = execute_classify(config);
    } else {
      written = execute_oracle(config);
    }
    for (const std::string& path : written) {
      std::printf("wrote %s\n", path.c_str());
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}
