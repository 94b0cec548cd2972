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

#include "cli/config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/io.hpp"

namespace dephasim::cli {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorKind::ConfigError, message);
}

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    if (!known.contains(item.key())) {
      config_error("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

double get_number(const json& object, const char* key) {
  if (!object.at(key).is_number()) {
    config_error(std::string("key \"") + key + "\" must be a number");
  }
  return object.at(key).get<double>();
}

}  // namespace

std::string_view family_name(StateFamily family) {
  switch (family) {
    case StateFamily::AlphaGamma: return "alpha-gamma";
    case StateFamily::Isotropic: return "isotropic";
    case StateFamily::AlphaBeta: return "alpha-beta";
    case StateFamily::Schmidt: return "schmidt";
    case StateFamily::File: return "file";
  }
  return "unknown";
}

StateFamily parse_family(const std::string& name) {
  if (name == "alpha-gamma") return StateFamily::AlphaGamma;
  if (name == "isotropic") return StateFamily::Isotropic;
  if (name == "alpha-beta") return StateFamily::AlphaBeta;
  if (name == "schmidt") return StateFamily::Schmidt;
  if (name == "file") return StateFamily::File;
  config_error("unknown state family \"" + name +
               "\" (expected alpha-gamma | isotropic | alpha-beta | schmidt | file)");
}

std::string_view measure_selection_name(MeasureSelection selection) {
  switch (selection) {
    case MeasureSelection::Negativity: return "negativity";
    case MeasureSelection::Lqu: return "lqu";
    case MeasureSelection::Both: return "both";
  }
  return "unknown";
}

MeasureSelection parse_measure_selection(const std::string& name) {
  if (name == "negativity") return MeasureSelection::Negativity;
  if (name == "lqu") return MeasureSelection::Lqu;
  if (name == "both") return MeasureSelection::Both;
  config_error("unknown measure \"" + name + "\" (expected negativity | lqu | both)");
}

const std::vector<Orientation>& default_orientations() {
  static const std::vector<Orientation> all = {
      Orientation::z(),
      Orientation::x(),
      Orientation::normalized(0.0, 1.0, 2.0),
      Orientation::normalized(1.0, 1.0, 1.0),
      Orientation::normalized(0.0, 1.0, 1.0),
  };
  return all;
}

RunConfig default_config() {
  RunConfig config;
  config.orientations = default_orientations();
  return config;
}

void apply_preset(RunConfig& config, const std::string& name) {
  if (name == "fig1" || name == "fig2") {
    config.state.family = StateFamily::AlphaGamma;
    config.state.alpha = 0.1;
    config.state.gamma = 0.5;
    config.tau_max = (name == "fig1") ? 5.0 : 20.0;
    config.steps = (name == "fig1") ? 501 : 2001;
  } else if (name == "fig3" || name == "fig4") {
    config.state.family = StateFamily::AlphaBeta;
    config.state.alpha = 0.4;
    config.state.beta = 0.7;
    config.tau_max = 20.0;
    config.steps = 2001;
  } else {
    config_error("unknown preset \"" + name + "\" (expected fig1 | fig2 | fig3 | fig4)");
  }
  config.orientations = default_orientations();
}

Orientation parse_orientation(const std::string& text) {
  std::istringstream stream(text);
  double values[3];
  char comma1 = 0, comma2 = 0;
  stream >> values[0] >> comma1 >> values[1] >> comma2 >> values[2];
  if (stream.fail() || comma1 != ',' || comma2 != ',' ||
      !(stream >> std::ws).eof()) {
    config_error("orientation \"" + text + "\" is not an x,y,z triple");
  }
  try {
    return Orientation::normalized(values[0], values[1], values[2]);
  } catch (const Error& e) {
    config_error("orientation \"" + text + "\": " + e.what());
  }
}

namespace {

void apply_state_json(StateSpec& spec, const json& object) {
  reject_unknown_keys(object,
                      {"family", "alpha", "beta", "gamma", "kind", "sign", "file"},
                      "\"state\"");
  if (object.contains("family")) {
    spec.family = parse_family(object.at("family").get<std::string>());
  }
  if (object.contains("alpha")) spec.alpha = get_number(object, "alpha");
  if (object.contains("beta")) spec.beta = get_number(object, "beta");
  if (object.contains("gamma")) spec.gamma = get_number(object, "gamma");
  if (object.contains("kind")) spec.schmidt_kind = object.at("kind").get<int>();
  if (object.contains("sign")) {
    const std::string sign = object.at("sign").get<std::string>();
    if (sign == "plus") {
      spec.schmidt_sign = SchmidtSign::Plus;
    } else if (sign == "minus") {
      spec.schmidt_sign = SchmidtSign::Minus;
    } else {
      config_error("state sign must be \"plus\" or \"minus\", got \"" + sign + "\"");
    }
  }
  if (object.contains("file")) spec.file = object.at("file").get<std::string>();
}

void apply_classifier_json(ClassifierConfig& classifier, const json& object) {
  reject_unknown_keys(object,
                      {"zero_threshold", "invariance_tolerance", "slope_threshold",
                       "horizon", "confirm_window", "plateau_time"},
                      "\"classifier\"");
  if (object.contains("zero_threshold"))
    classifier.zero_threshold = get_number(object, "zero_threshold");
  if (object.contains("invariance_tolerance"))
    classifier.invariance_tolerance = get_number(object, "invariance_tolerance");
  if (object.contains("slope_threshold"))
    classifier.slope_threshold = get_number(object, "slope_threshold");
  if (object.contains("horizon")) classifier.horizon = get_number(object, "horizon");
  if (object.contains("confirm_window"))
    classifier.confirm_window = get_number(object, "confirm_window");
  if (object.contains("plateau_time"))
    classifier.plateau_time = get_number(object, "plateau_time");
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
  json root;
  try {
    root = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    config_error(std::string("config file ") + path + ": " + e.what());
  }
  if (!root.is_object()) {
    config_error("config file " + path + " must hold a JSON object");
  }
  reject_unknown_keys(root,
                      {"state", "orientations", "tau_max", "steps", "measure",
                       "classifier", "out", "format", "seed", "trajectories"},
                      "config file " + path);

  if (root.contains("state")) apply_state_json(config.state, root.at("state"));
  if (root.contains("orientations")) {
    const json& list = root.at("orientations");
    if (!list.is_array() || list.empty()) {
      config_error("\"orientations\" must be a non-empty array of [x, y, z] triples");
    }
    config.orientations.clear();
    for (const json& entry : list) {
      if (!entry.is_array() || entry.size() != 3) {
        config_error("each orientation must be an [x, y, z] triple");
      }
      try {
        config.orientations.push_back(Orientation::normalized(
            entry[0].get<double>(), entry[1].get<double>(), entry[2].get<double>()));
      } catch (const Error& e) {
        config_error(std::string("orientations: ") + e.what());
      }
    }
  }
  if (root.contains("tau_max")) config.tau_max = get_number(root, "tau_max");
  if (root.contains("steps")) config.steps = root.at("steps").get<int>();
  if (root.contains("measure")) {
    config.measures = parse_measure_selection(root.at("measure").get<std::string>());
  }
  if (root.contains("classifier")) {
    apply_classifier_json(config.classifier, root.at("classifier"));
  }
  if (root.contains("out")) config.out = root.at("out").get<std::string>();
  if (root.contains("format")) config.format = root.at("format").get<std::string>();
  if (root.contains("seed")) config.seed = root.at("seed").get<std::uint64_t>();
  if (root.contains("trajectories")) {
    config.trajectories = root.at("trajectories").get<std::int64_t>();
  }
}

json to_json(const RunConfig& config) {
  json state = {{"family", std::string(family_name(config.state.family))}};
  switch (config.state.family) {
    case StateFamily::AlphaGamma:
      state["alpha"] = config.state.alpha;
      state["gamma"] = config.state.gamma;
      break;
    case StateFamily::Isotropic:
      state["alpha"] = config.state.alpha;
      break;
    case StateFamily::AlphaBeta:
      state["alpha"] = config.state.alpha;
      state["beta"] = config.state.beta;
      break;
    case StateFamily::Schmidt:
      state["alpha"] = config.state.alpha;
      state["kind"] = config.state.schmidt_kind;
      state["sign"] = config.state.schmidt_sign == SchmidtSign::Plus ? "plus" : "minus";
      break;
    case StateFamily::File:
      state["file"] = config.state.file;
      break;
  }

  json orientations = json::array();
  for (const Orientation& n : config.orientations) {
    orientations.push_back({n.nx(), n.ny(), n.nz()});
  }

  return json{
      {"state", state},
      {"orientations", orientations},
      {"tau_max", config.tau_max},
      {"steps", config.steps},
      {"measure", std::string(measure_selection_name(config.measures))},
      {"classifier",
       {{"zero_threshold", config.classifier.zero_threshold},
        {"invariance_tolerance", config.classifier.invariance_tolerance},
        {"slope_threshold", config.classifier.slope_threshold},
        {"horizon", config.classifier.horizon},
        {"confirm_window", config.classifier.confirm_window},
        {"plateau_time", config.classifier.plateau_time}}},
      {"out", config.out},
      {"format", config.format},
      {"seed", config.seed},
      {"trajectories", config.trajectories},
  };
}

void validate_config(const RunConfig& config) {
  if (config.out.empty()) config_error("--out is required");
  if (config.format != "csv") {
    config_error("unsupported format \"" + config.format +
                 "\" (trajectory tables are written as csv)");
  }
  if (!(config.tau_max > 0.0)) config_error("tau_max must be > 0");
  if (config.steps < 2) config_error("steps must be >= 2");
  if (config.orientations.empty()) config_error("at least one orientation is required");
  if (config.trajectories < 1) config_error("trajectories must be >= 1");
  const ClassifierConfig& c = config.classifier;
  if (!(c.zero_threshold > 0.0 && c.invariance_tolerance > 0.0 &&
        c.slope_threshold > 0.0 && c.horizon > 0.0 && c.confirm_window > 0.0 &&
        c.plateau_time > 0.0)) {
    config_error("classifier thresholds must all be positive");
  }
  if (!(c.confirm_window < c.horizon)) {
    config_error("classifier confirm_window must be smaller than the horizon");
  }
  if (config.state.family == StateFamily::File && config.state.file.empty()) {
    config_error("state family \"file\" needs a matrix file path");
  }
}

DensityMatrix initial_state(const StateSpec& spec) {
  switch (spec.family) {
    case StateFamily::AlphaGamma:
      return rho_alpha_gamma(spec.alpha, spec.gamma);
    case StateFamily::Isotropic:
      return isotropic(spec.alpha);
    case StateFamily::AlphaBeta:
      return rho_alpha_beta(spec.alpha, spec.beta);
    case StateFamily::Schmidt:
      return schmidt_state(spec.schmidt_kind, spec.alpha, spec.schmidt_sign).density();
    case StateFamily::File:
      return read_density_matrix_file(spec.file);
  }
  config_error("unhandled state family");
}

}  // namespace dephasim::cli
