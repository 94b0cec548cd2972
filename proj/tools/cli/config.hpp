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

#ifndef DEPHASIM_CLI_CONFIG_HPP
#define DEPHASIM_CLI_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dephasim/analysis.hpp"
#include "dephasim/dynamics.hpp"
#include "dephasim/states.hpp"

namespace dephasim::cli {

enum class StateFamily { AlphaGamma, Isotropic, AlphaBeta, Schmidt, File };

std::string_view family_name(StateFamily family);
StateFamily parse_family(const std::string& name);

struct StateSpec {
  StateFamily family = StateFamily::AlphaGamma;
  double alpha = 0.1;
  double beta = 0.7;
  double gamma = 0.5;
  int schmidt_kind = 1;
  SchmidtSign schmidt_sign = SchmidtSign::Plus;
  std::string file;  // initial state loaded from a matrix file
};

enum class MeasureSelection { Negativity, Lqu, Both };

std::string_view measure_selection_name(MeasureSelection selection);
MeasureSelection parse_measure_selection(const std::string& name);

/// Fully resolved run description. Field precedence when assembling one:
/// built-in defaults, then the config file, then a preset, then individual
/// command-line flags.
struct RunConfig {
  StateSpec state;
  std::vector<Orientation> orientations;
  double tau_max = 10.0;
  int steps = 201;
  MeasureSelection measures = MeasureSelection::Both;
  ClassifierConfig classifier;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 20260809;
  std::int64_t trajectories = 10000;
};

/// The five field directions swept when none are given explicitly:
///   o0 = (0, 0, 1)          o1 = (1, 0, 0)         o2 = (0, 1, 2)/sqrt(5)
///   o3 = (1, 1, 1)/sqrt(3)  o4 = (0, 1, 1)/sqrt(2)
///
/// o0 and o1 are the two axis-aligned reference directions; o3 is fully
/// generic; o2 and o4 are the two tilted n_x = 0 directions, for which the
/// local quantum uncertainty of the isotropic-psi3 mixtures transiently rises
/// above its initial value. All of o2..o4 have n_z > 0, so the psi3-dominated
/// mixtures keep asymptotic entanglement there (freezing) while o1 destroys
/// it in finite time.
const std::vector<Orientation>& default_orientations();

RunConfig default_config();

/// Named parameter bundles for the four standard sweeps:
///   fig1 / fig2: alpha-gamma family, alpha = 0.1, gamma = 0.5
///                (fig1: tau_max 5, fig2: tau_max 20), 501/2001 steps
///   fig3 / fig4: alpha-beta family, alpha = 0.4, beta = 0.7, tau_max 20,
///                2001 steps
void apply_preset(RunConfig& config, const std::string& name);

/// Merge a declarative JSON config file into `config`. Unknown keys are
/// rejected with a ConfigError naming the offending key.
void apply_config_file(RunConfig& config, const std::string& path);

/// Parse an "x,y,z" triple; any non-zero vector is accepted and rescaled to
/// unit length.
Orientation parse_orientation(const std::string& text);

/// Resolved-config echo used in every output header (and round-trippable as
/// a config file).
nlohmann::json to_json(const RunConfig& config);

/// Reject structurally invalid configs (empty output path, bad grid, ...).
void validate_config(const RunConfig& config);

/// Construct the initial density matrix described by `spec`; File specs are
/// read and validated from disk.
DensityMatrix initial_state(const StateSpec& spec);

}  // namespace dephasim::cli

#endif  // DEPHASIM_CLI_CONFIG_HPP
