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

#ifndef DEPHASIM_CLI_RUN_HPP
#define DEPHASIM_CLI_RUN_HPP

#include "cli/config.hpp"
#include "cli/io.hpp"

namespace dephasim::cli {

/// Worker threads for sweeps: DEPHASIM_THREADS when set (>= 1), otherwise the
/// machine parallelism. Results never depend on this value; only wall time
/// does.
int worker_thread_count();

// Each command comes as a pure computation over the config plus a writer that
// serializes in deterministic cell order; `run_*` parallelizes over
// (orientation) cells internally.

struct SimulateResult {
  std::vector<Trajectory> cells;  // one per configured orientation
};

SimulateResult run_simulate(const RunConfig& config);
CsvTable simulate_table(const RunConfig& config, const SimulateResult& result);

struct AsymptoteCell {
  DensityMatrix state;
  std::string zero_pattern;  // six '0'/'1' rows joined by '|'
  double negativity = 0.0;
  double lqu = 0.0;
};

std::vector<AsymptoteCell> run_asymptote(const RunConfig& config);
CsvTable asymptote_table(const RunConfig& config, const std::vector<AsymptoteCell>& cells);
/// Matrix file for one asymptotic state, headed by the config echo.
std::string asymptote_matrix_file(const RunConfig& config, int orientation_id,
                                  const AsymptoteCell& cell);

struct ClassifyCell {
  int orientation_id = 0;
  Measure measure = Measure::Negativity;
  RegimeLabel label;
  double max_rise = 0.0;  // max over the window of f(tau) - f(0)
};

std::vector<ClassifyCell> run_classify(const RunConfig& config);
CsvTable classify_table(const RunConfig& config, const std::vector<ClassifyCell>& cells);

struct OracleRow {
  int orientation_id = 0;
  double tau = 0.0;
  double trace_distance = 0.0;
  double expected_error = 0.0;  // the 1/sqrt(N) reference line
};

std::vector<OracleRow> run_oracle(const RunConfig& config);
CsvTable oracle_table(const RunConfig& config, const std::vector<OracleRow>& rows);

/// Execute one subcommand end to end (compute + write). Returns the paths
/// written, for reporting.
std::vector<std::string> execute_simulate(const RunConfig& config);
std::vector<std::string> execute_asymptote(const RunConfig& config);
std::vector<std::string> execute_classify(const RunConfig& config);
std::vector<std::string> execute_oracle(const RunConfig& config);

}  // namespace dephasim::cli

#endif  // DEPHASIM_CLI_RUN_HPP
