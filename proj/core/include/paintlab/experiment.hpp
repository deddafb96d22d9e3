// Copyright 2026 The Paintlab Authors
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

#ifndef PAINTLAB_EXPERIMENT_HPP
#define PAINTLAB_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paintlab/game.hpp"
#include "paintlab/solver.hpp"
#include "paintlab/strategies.hpp"

namespace paintlab {

inline constexpr int kConfigVersion = 1;

struct BudgetRule {
  enum class Kind { Fixed, PredictedTimes };
  Kind kind = Kind::Fixed;
  int erasers = 0;      // Fixed
  double factor = 1.0;  // PredictedTimes: ceil(factor n / (2 log_b(np)))
};

/// Erasers per vertex under the rule. ConfigError if the prediction is
/// undefined (np <= 1).
int budget_for(const BudgetRule& rule, std::size_t n, double p);

struct ExperimentConfig {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  BudgetRule budget;
  std::string painter = "full-set";
  std::string corrector = "dense";
  StrategyParams params;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool timing = false;      // add wall-clock column (breaks byte-identical output)
  std::string csv_path;     // optional
  std::string summary_path; // optional
};

/// Versioned JSON config. Unknown keys, unknown strategy names and invalid
/// values raise ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig read_config(const std::string& path);
/// ConfigError describing the first invalid field.
void validate(const ExperimentConfig& config);

enum class TrialStatus { Played, StrategyError };

struct ReportRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  int budget = 0;
  TrialStatus status = TrialStatus::Played;
  Outcome outcome = Outcome::CorrectorWins;
  std::size_t rounds = 0;
  int max_erasers_used = 0;
  std::size_t erasers_total = 0;
  std::size_t erasers_small = 0;
  std::size_t erasers_medium = 0;
  std::size_t erasers_large = 0;
  std::size_t erasers_other = 0;  // rounds of correctors without set classes
  std::size_t fallbacks = 0;
  std::size_t complex_components = 0;
  std::optional<double> chi_asymptotic;  // absent when np <= 1
  std::optional<double> ratio;           // (max_erasers_used + 1) / chi_asymptotic
  double wall_ms = 0.0;
  std::string note;
};

struct Summary {
  std::size_t trials = 0;
  std::size_t corrector_wins = 0;
  std::size_t painter_wins = 0;
  std::size_t forfeits = 0;
  std::size_t strategy_errors = 0;
  double win_rate = 0.0;  // corrector prevails / trials
  std::optional<double> ratio_min, ratio_mean, ratio_max;
  double mean_rounds = 0.0;
  int max_erasers_used = 0;
  int budget = 0;
};

struct ExperimentResult {
  std::vector<ReportRow> rows;  // ordered by trial index
  Summary summary;
};

/// Runs `trials` independent seeded games on fresh G(n,p) samples.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Plays one trial; exposed for tests.
ReportRow run_trial(const ExperimentConfig& config, std::size_t trial);

Summary summarize(const std::vector<ReportRow>& rows, int budget);

std::string rows_to_csv(const std::vector<ReportRow>& rows, bool timing);
std::string summary_to_json(const ExperimentConfig& config, const Summary& summary);
std::string result_to_json(const ExperimentConfig& config, const ExperimentResult& result);

struct SweepPoint {
  std::size_t n = 0;
  Summary summary;
};
struct SweepResult {
  std::vector<SweepPoint> points;
  bool non_increasing = true;  // mean ratios, each within 5% of the previous
  double slack = 0.05;
};
/// run_experiment for each n in n_list with the rest of `base` fixed.
SweepResult ratio_sweep(const ExperimentConfig& base, const std::vector<std::size_t>& n_list,
                        double slack = 0.05);
std::string sweep_to_csv(const SweepResult& sweep);

struct ChainRow {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  int chi = 0;
  std::optional<int> chi_list;  // within choosability caps only
  int chi_paint = 0;
  double upper = 0.0;  // chi ln n + 1
  bool ok = true;
};
struct ChainReport {
  std::vector<ChainRow> rows;
  std::size_t violations = 0;
  bool pass() const noexcept { return violations == 0; }
};

/// Checks chi <= chi_L <= chi_P <= chi ln n + 1 on the fixture families and
/// on `samples` seeded random graphs with 1 <= n <= n_max. ConfigError if
/// n_max exceeds the paintability cap.
ChainReport chain_check(std::size_t n_max, std::size_t samples, std::uint64_t seed,
                        SolverLimits limits = {});
std::string chain_to_csv(const ChainReport& report);

}  // namespace paintlab

#endif  // PAINTLAB_EXPERIMENT_HPP
