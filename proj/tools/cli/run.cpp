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

#include "cli/run.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>

#include "dephasim/correlations.hpp"
#include "dephasim/linalg.hpp"

namespace dephasim::cli {

namespace {

constexpr double kZeroPatternCut = 1e-12;

std::vector<std::string> header_comments(const char* command, const RunConfig& config) {
  std::vector<std::string> comments;
  comments.push_back(std::string("dephasim ") + command);
  comments.push_back("config: " + to_json(config).dump());
  for (std::size_t i = 0; i < config.orientations.size(); ++i) {
    const Orientation& n = config.orientations[i];
    comments.push_back("orientation o" + std::to_string(i) + " = (" +
                       format_double(n.nx()) + ", " + format_double(n.ny()) + ", " +
                       format_double(n.nz()) + ")");
  }
  return comments;
}

// Run fn(0..count-1) on the worker pool; any exception is rethrown on the
// caller thread. Cell order of side effects is up to the caller's slots.
template <typename F>
void parallel_cells(std::size_t count, F&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_thread_count()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string zero_pattern_of(const Mat6& m) {
  std::string pattern;
  pattern.reserve(kDim * kDim + kDim - 1);
  for (int i = 0; i < kDim; ++i) {
    if (i) pattern.push_back('|');
    for (int j = 0; j < kDim; ++j) {
      pattern.push_back(std::abs(m(i, j)) > kZeroPatternCut ? '1' : '0');
    }
  }
  return pattern;
}

std::string optional_cell(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

}  // namespace

int worker_thread_count() {
  if (const char* env = std::getenv("DEPHASIM_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware > 0 ? static_cast<int>(hardware) : 1;
}

SimulateResult run_simulate(const RunConfig& config) {
  const DensityMatrix rho0 = initial_state(config.state);
  std::vector<std::optional<Trajectory>> slots(config.orientations.size());
  parallel_cells(config.orientations.size(), [&](std::size_t i) {
    slots[i] = sample_trajectory(rho0, config.orientations[i], config.tau_max,
                                 config.steps);
  });
  SimulateResult result;
  result.cells.reserve(slots.size());
  for (auto& slot : slots) result.cells.push_back(std::move(*slot));
  return result;
}

CsvTable simulate_table(const RunConfig& config, const SimulateResult& result) {
  CsvTable table;
  table.comments = header_comments("simulate", config);
  table.header = {"orientation_id", "tau", "negativity", "lqu"};
  for (std::size_t cell = 0; cell < result.cells.size(); ++cell) {
    const Trajectory& trajectory = result.cells[cell];
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
      table.rows.push_back({std::to_string(cell), format_double(trajectory.times[i]),
                            format_double(trajectory.negativity[i]),
                            format_double(trajectory.lqu[i])});
    }
  }
  return table;
}

std::vector<AsymptoteCell> run_asymptote(const RunConfig& config) {
  const DensityMatrix rho0 = initial_state(config.state);
  std::vector<std::optional<AsymptoteCell>> slots(config.orientations.size());
  parallel_cells(config.orientations.size(), [&](std::size_t i) {
    DensityMatrix limit = asymptotic_state(rho0, config.orientations[i]);
    AsymptoteCell cell{limit, zero_pattern_of(limit.matrix()), negativity(limit),
                       lqu(limit)};
    slots[i] = std::move(cell);
  });
  std::vector<AsymptoteCell> cells;
  cells.reserve(slots.size());
  for (auto& slot : slots) cells.push_back(std::move(*slot));
  return cells;
}

CsvTable asymptote_table(const RunConfig& config, const std::vector<AsymptoteCell>& cells) {
  CsvTable table;
  table.comments = header_comments("asymptote", config);
  table.header = {"orientation_id", "nx", "ny", "nz", "negativity", "lqu", "zero_pattern"};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Orientation& n = config.orientations[i];
    table.rows.push_back({std::to_string(i), format_double(n.nx()), format_double(n.ny()),
                          format_double(n.nz()), format_double(cells[i].negativity),
                          format_double(cells[i].lqu), cells[i].zero_pattern});
  }
  return table;
}

std::string asymptote_matrix_file(const RunConfig& config, int orientation_id,
                                  const AsymptoteCell& cell) {
  std::vector<std::string> comments = header_comments("asymptote", config);
  comments.push_back("orientation_id: " + std::to_string(orientation_id));
  comments.push_back("zero_pattern: " + cell.zero_pattern);
  comments.push_back("negativity: " + format_double(cell.negativity));
  comments.push_back("lqu: " + format_double(cell.lqu));
  return matrix_file_string(cell.state.matrix(), comments);
}

std::vector<ClassifyCell> run_classify(const RunConfig& config) {
  const DensityMatrix rho0 = initial_state(config.state);

  std::vector<Measure> measures;
  if (config.measures != MeasureSelection::Lqu) measures.push_back(Measure::Negativity);
  if (config.measures != MeasureSelection::Negativity) measures.push_back(Measure::Lqu);

  // Classification has its own window: the series must cover the classifier
  // horizon on a dense grid no matter what tau_max says.
  const int steps = std::max(config.steps, 201);

  std::vector<std::optional<Trajectory>> slots(config.orientations.size());
  parallel_cells(config.orientations.size(), [&](std::size_t i) {
    slots[i] = sample_trajectory(rho0, config.orientations[i],
                                 config.classifier.horizon, steps);
  });

  std::vector<ClassifyCell> cells;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Trajectory& trajectory = *slots[i];
    for (Measure measure : measures) {
      ClassifyCell cell;
      cell.orientation_id = static_cast<int>(i);
      cell.measure = measure;
      cell.label = classify(trajectory, measure, config.classifier);
      const std::vector<double>& f =
          measure == Measure::Negativity ? trajectory.negativity : trajectory.lqu;
      double rise = 0.0;
      for (double value : f) rise = std::max(rise, value - f.front());
      cell.max_rise = rise;
      cells.push_back(cell);
    }
  }
  return cells;
}

CsvTable classify_table(const RunConfig& config, const std::vector<ClassifyCell>& cells) {
  CsvTable table;
  table.comments = header_comments("classify", config);
  table.header = {"orientation_id", "nx", "ny", "nz", "measure", "regime",
                  "sudden_death_time", "plateau_value", "onset_time", "max_rise"};
  for (const ClassifyCell& cell : cells) {
    const Orientation& n = config.orientations[cell.orientation_id];
    table.rows.push_back({std::to_string(cell.orientation_id), format_double(n.nx()),
                          format_double(n.ny()), format_double(n.nz()),
                          std::string(measure_name(cell.measure)),
                          std::string(regime_kind_name(cell.label.kind)),
                          optional_cell(cell.label.sudden_death_time),
                          optional_cell(cell.label.plateau_value),
                          optional_cell(cell.label.onset_time),
                          format_double(cell.max_rise)});
  }
  return table;
}

std::vector<OracleRow> run_oracle(const RunConfig& config) {
  if (config.trajectories < 100) {
    throw Error(ErrorKind::ConfigError, "oracle runs need trajectories >= 100");
  }
  const DensityMatrix rho0 = initial_state(config.state);
  const double expected = 1.0 / std::sqrt(static_cast<double>(config.trajectories));

  std::vector<std::vector<OracleRow>> slots(config.orientations.size());
  parallel_cells(config.orientations.size(), [&](std::size_t i) {
    const Orientation& n = config.orientations[i];
    std::vector<OracleRow> rows;
    rows.reserve(config.steps);
    for (int s = 0; s < config.steps; ++s) {
      const double tau = config.tau_max * static_cast<double>(s) / (config.steps - 1);
      // Every (orientation, tau) row draws from its own substream.
      const std::uint64_t row_seed =
          config.seed + 0x9e3779b97f4a7c15ULL *
                            (static_cast<std::uint64_t>(i) * config.steps + s + 1);
      const DensityMatrix estimate =
          stochastic_unfold(rho0, n, tau, config.trajectories, row_seed);
      const DensityMatrix exact = evolve_exact(rho0, n, tau);
      rows.push_back({static_cast<int>(i), tau,
                      trace_distance(estimate.matrix(), exact.matrix()), expected});
    }
    slots[i] = std::move(rows);
  });

  std::vector<OracleRow> rows;
  for (const auto& slot : slots) rows.insert(rows.end(), slot.begin(), slot.end());
  return rows;
}

CsvTable oracle_table(const RunConfig& config, const std::vector<OracleRow>& rows) {
  CsvTable table;
  table.comments = header_comments("oracle", config);
  table.comments.push_back("expected_error is the 1/sqrt(trajectories) reference line");
  table.header = {"orientation_id", "tau", "trace_distance", "expected_error"};
  for (const OracleRow& row : rows) {
    table.rows.push_back({std::to_string(row.orientation_id), format_double(row.tau),
                          format_double(row.trace_distance),
                          format_double(row.expected_error)});
  }
  return table;
}

std::vector<std::string> execute_simulate(const RunConfig& config) {
  const SimulateResult result = run_simulate(config);
  write_text_file(config.out, to_csv(simulate_table(config, result)));
  return {config.out};
}

std::vector<std::string> execute_asymptote(const RunConfig& config) {
  const std::vector<AsymptoteCell> cells = run_asymptote(config);
  std::vector<std::string> written;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string path = config.out + ".o" + std::to_string(i) + ".mat";
    write_text_file(path, asymptote_matrix_file(config, static_cast<int>(i), cells[i]));
    written.push_back(path);
  }
  const std::string summary = config.out + ".summary.csv";
  write_text_file(summary, to_csv(asymptote_table(config, cells)));
  written.push_back(summary);
  return written;
}

std::vector<std::string> execute_classify(const RunConfig& config) {
  const std::vector<ClassifyCell> cells = run_classify(config);
  write_text_file(config.out, to_csv(classify_table(config, cells)));
  return {config.out};
}

std::vector<std::string> execute_oracle(const RunConfig& config) {
  const std::vector<OracleRow> rows = run_oracle(config);
  write_text_file(config.out, to_csv(oracle_table(config, rows)));
  return {config.out};
}

}  // namespace dephasim::cli
