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

#ifndef DEPHASIM_ANALYSIS_HPP
#define DEPHASIM_ANALYSIS_HPP

#include <optional>

#include "dephasim/dynamics.hpp"

namespace dephasim {

enum class RegimeKind { SuddenDeath, Freezing, TimeInvariant, PlainDecay };

std::string_view regime_kind_name(RegimeKind kind);

/// Classification of one correlation trajectory. SuddenDeath carries the
/// refined death time; Freezing carries the plateau value and the onset of
/// the flat region.
struct RegimeLabel {
  RegimeKind kind = RegimeKind::PlainDecay;
  std::optional<double> sudden_death_time;
  std::optional<double> plateau_value;
  std::optional<double> onset_time;
};

/// Thresholds for the regime classifier. The underlying dynamics names the
/// regimes only qualitatively, so every cut lives here and can be overridden
/// from the CLI.
struct ClassifierConfig {
  double zero_threshold = 1e-8;       // below this a measure counts as zero
  double invariance_tolerance = 1e-6; // max deviation for TimeInvariant
  double slope_threshold = 1e-4;      // |d f / d tau| cut for "flat"
  double horizon = 20.0;              // classification window [0, horizon]
  double confirm_window = 2.0;        // zero must persist this long after a crossing
  double plateau_time = 100.0;        // where the plateau value is evaluated;
                                      // by then the slowest coherence (rate 1/4)
                                      // is damped below 1e-10
};

enum class Measure { Negativity, Lqu };

std::string_view measure_name(Measure measure);

/// Label a trajectory as TimeInvariant, SuddenDeath, Freezing or PlainDecay,
/// in that order of precedence:
///   - TimeInvariant: max |f - f(0)| <= invariance_tolerance over the window.
///   - SuddenDeath: f drops below zero_threshold at some tau* and stays below
///     through tau* + confirm_window; tau* is refined by bisection on the
///     exact propagator.
///   - Freezing: the least-squares slope over the last tenth of the window is
///     within slope_threshold, some earlier local slope exceeded it, and the
///     converged value at plateau_time is still above zero_threshold.
///   - PlainDecay: everything else.
///
/// The series must cover [0, horizon] on a uniform grid with at least 100
/// points (InsufficientSamples / NonUniformGrid otherwise).
RegimeLabel classify(const Trajectory& series, Measure measure,
                     const ClassifierConfig& config = {});

/// First time the negativity of the evolved state falls below
/// config.zero_threshold, refined by bisection to +-1e-6. Returns 0 for an
/// initially separable state, and nothing when the asymptotic state is still
/// entangled (or no crossing occurs within the horizon).
std::optional<double> sudden_death_time(const DensityMatrix& rho0, const Orientation& n,
                                        const ClassifierConfig& config = {});

struct AsymptoticCorrelations {
  double negativity = 0.0;
  double lqu = 0.0;
};

/// Both measures evaluated on the asymptotic state.
AsymptoticCorrelations asymptotic_correlations(const DensityMatrix& rho0,
                                               const Orientation& n);

enum class SchmidtFate { SuddenDeathForced, FreezingPossible };

/// Predict whether a Schmidt-form pure state can keep entanglement forever
/// under field direction n: FreezingPossible when its asymptotic negativity
/// stays above the zero threshold, SuddenDeathForced otherwise.
///
/// At equal Schmidt weights the asymptotic negativity of kind 5 is
/// max(0, n_z) and that of kind 1 is max(0, -n_z) (they trade places under
/// the qutrit level switch 0 <-> 2, which mirrors the field direction);
/// kinds 2, 3, 4 and 6 lose all entanglement for every direction.
SchmidtFate schmidt_fate(int kind, double alpha, const Orientation& n,
                         double zero_threshold = 1e-8);

}  // namespace dephasim

#endif  // DEPHASIM_ANALYSIS_HPP
