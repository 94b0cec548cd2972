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

#include "dephasim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "dephasim/correlations.hpp"

namespace dephasim {

namespace {

double measure_of(const DensityMatrix& state, Measure measure) {
  return measure == Measure::Negativity ? negativity(state) : lqu(state);
}

const std::vector<double>& column_of(const Trajectory& series, Measure measure) {
  return measure == Measure::Negativity ? series.negativity : series.lqu;
}

// Least-squares slope of f over the index range [first, last].
double fitted_slope(const std::vector<double>& times, const std::vector<double>& f,
                    std::size_t first, std::size_t last) {
  const double n = static_cast<double>(last - first + 1);
  double mean_t = 0.0, mean_f = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    mean_t += times[i];
    mean_f += f[i];
  }
  mean_t /= n;
  mean_f /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    num += (times[i] - mean_t) * (f[i] - mean_f);
    den += (times[i] - mean_t) * (times[i] - mean_t);
  }
  return den > 0.0 ? num / den : 0.0;
}

double bisect_first_crossing(const DensityMatrix& rho0, const CollectiveOperator& op,
                             Measure measure, double threshold, double lo, double hi) {
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (measure_of(evolve_exact(rho0, op, mid), measure) < threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_series(const Trajectory& series, const ClassifierConfig& config) {
  const std::size_t count = series.times.size();
  if (series.states.size() != count || series.negativity.size() != count ||
      series.lqu.size() != count) {
    throw Error(ErrorKind::InvalidArgument, "trajectory columns have mismatched lengths");
  }
  if (count < 100) {
    std::ostringstream oss;
    oss << "classification needs at least 100 samples, got " << count;
    throw Error(ErrorKind::InsufficientSamples, oss.str());
  }
  if (series.times.front() > 1e-12 ||
      series.times.back() < config.horizon - 1e-9) {
    std::ostringstream oss;
    oss << "series covers [" << series.times.front() << ", " << series.times.back()
        << "] but the classifier horizon is [0, " << config.horizon << "]";
    throw Error(ErrorKind::InsufficientSamples, oss.str());
  }
  const double dt = series.times[1] - series.times[0];
  for (std::size_t i = 1; i < count; ++i) {
    const double step = series.times[i] - series.times[i - 1];
    if (std::abs(step - dt) > 1e-9 * std::max(1.0, dt)) {
      std::ostringstream oss;
      oss << "grid step " << step << " at index " << i << " differs from " << dt;
      throw Error(ErrorKind::NonUniformGrid, oss.str());
    }
  }
}

}  // namespace

std::string_view regime_kind_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::SuddenDeath: return "SuddenDeath";
    case RegimeKind::Freezing: return "Freezing";
    case RegimeKind::TimeInvariant: return "TimeInvariant";
    case RegimeKind::PlainDecay: return "PlainDecay";
  }
  return "Unknown";
}

std::string_view measure_name(Measure measure) {
  return measure == Measure::Negativity ? "negativity" : "lqu";
}

RegimeLabel classify(const Trajectory& series, Measure measure,
                     const ClassifierConfig& config) {
  check_series(series, config);
  const std::vector<double>& f = column_of(series, measure);
  const std::vector<double>& t = series.times;

  // Restrict every statistic to the classification window [0, horizon].
  std::size_t end = t.size() - 1;
  while (end > 0 && t[end] > config.horizon + 1e-9) --end;

  double max_deviation = 0.0;
  for (std::size_t i = 0; i <= end; ++i) {
    max_deviation = std::max(max_deviation, std::abs(f[i] - f[0]));
  }
  if (max_deviation <= config.invariance_tolerance) {
    RegimeLabel label;
    label.kind = RegimeKind::TimeInvariant;
    return label;
  }

  // Sudden death: first sample below the zero threshold, confirmed to stay
  // below for confirm_window afterwards.
  for (std::size_t c = 0; c <= end; ++c) {
    if (f[c] >= config.zero_threshold) continue;
    if (t[c] + config.confirm_window > t[end] + 1e-9) break;  // cannot confirm
    bool confirmed = true;
    for (std::size_t j = c; j <= end && t[j] <= t[c] + config.confirm_window + 1e-9; ++j) {
      if (f[j] >= config.zero_threshold) {
        confirmed = false;
        break;
      }
    }
    if (!confirmed) continue;

    RegimeLabel label;
    label.kind = RegimeKind::SuddenDeath;
    if (c == 0) {
      label.sudden_death_time = 0.0;  // separable from the start
    } else {
      label.sudden_death_time =
          bisect_first_crossing(series.states.front(), collective_operator(series.orientation),
                                measure, config.zero_threshold, t[c - 1], t[c]);
    }
    return label;
  }

  // Freezing: flat tail at a nonzero level that was reached by actual decay.
  std::size_t tail_first = end;
  while (tail_first > 0 && t[tail_first - 1] >= 0.9 * config.horizon - 1e-9) --tail_first;
  const double late_slope = fitted_slope(t, f, tail_first, end);

  if (std::abs(late_slope) <= config.slope_threshold) {
    const double dt = t[1] - t[0];
    double max_early_slope = 0.0;
    for (std::size_t i = 0; i + 1 <= end && t[i + 1] < 0.9 * config.horizon; ++i) {
      max_early_slope = std::max(max_early_slope, std::abs(f[i + 1] - f[i]) / dt);
    }
    const double plateau = measure_of(
        evolve_exact(series.states.front(), series.orientation, config.plateau_time),
        measure);
    if (max_early_slope > config.slope_threshold && plateau > config.zero_threshold) {
      // Onset: start of the trailing run of locally flat steps.
      std::size_t onset = end;
      while (onset > 0 && std::abs(f[onset] - f[onset - 1]) / dt <= config.slope_threshold) {
        --onset;
      }
      RegimeLabel label;
      label.kind = RegimeKind::Freezing;
      label.plateau_value = plateau;
      label.onset_time = t[onset];
      return label;
    }
  }

  RegimeLabel label;
  label.kind = RegimeKind::PlainDecay;
  return label;
}

std::optional<double> sudden_death_time(const DensityMatrix& rho0, const Orientation& n,
                                        const ClassifierConfig& config) {
  if (negativity(rho0) <= config.zero_threshold) {
    return 0.0;
  }
  const CollectiveOperator op = collective_operator(n);
  if (negativity(asymptotic_state(rho0, op)) > config.zero_threshold) {
    return std::nullopt;  // entanglement survives forever
  }
  constexpr int kScanIntervals = 2000;
  const double dt = config.horizon / kScanIntervals;
  double prev = 0.0;
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double tau = i * dt;
    if (negativity(evolve_exact(rho0, op, tau)) < config.zero_threshold) {
      return bisect_first_crossing(rho0, op, Measure::Negativity,
                                   config.zero_threshold, prev, tau);
    }
    prev = tau;
  }
  return std::nullopt;  // no crossing inside the horizon
}

AsymptoticCorrelations asymptotic_correlations(const DensityMatrix& rho0,
                                               const Orientation& n) {
  const DensityMatrix limit = asymptotic_state(rho0, n);
  return {negativity(limit), lqu(limit)};
}

SchmidtFate schmidt_fate(int kind, double alpha, const Orientation& n,
                         double zero_threshold) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream oss;
    oss << "alpha = " << alpha << " must lie strictly inside (0, 1)";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }
  const DensityMatrix rho = schmidt_state(kind, alpha).density();
  const double surviving = negativity(asymptotic_state(rho, n));
  return surviving > zero_threshold ? SchmidtFate::FreezingPossible
                                    : SchmidtFate::SuddenDeathForced;
}

}  // namespace dephasim
