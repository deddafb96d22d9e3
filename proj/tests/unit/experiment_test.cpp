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

#include <gtest/gtest.h>

#include "json.hpp"
#include "paintlab/errors.hpp"
#include "paintlab/experiment.hpp"

namespace paintlab {
namespace {

const char* kBasic = R"({
  "version": 1, "n": 300, "p": 0.3, "trials": 4, "master_seed": 11,
  "budget": {"rule": "fixed", "erasers": 300},
  "painter": "random:0.4", "corrector": "dense", "threads": 2
})";

TEST(Config, ParsesAllSections) {
  const ExperimentConfig c = parse_config(R"({
    "version": 1, "n": 1000, "p": 0.01, "trials": 3, "master_seed": 5,
    "budget": {"rule": "predicted", "factor": 2.0},
    "painter": "low-eraser", "corrector": "sparse",
    "params": {"regime": "sparse", "omega": 3.0, "epsilon": 0.2, "strict": true},
    "threads": 1, "timing": true, "output": {"csv": "a.csv", "summary": "b.json"}
  })");
  EXPECT_EQ(c.n, 1000u);
  EXPECT_EQ(c.budget.kind, BudgetRule::Kind::PredictedTimes);
  EXPECT_DOUBLE_EQ(c.budget.factor, 2.0);
  EXPECT_EQ(c.params.regime, Regime::Sparse);
  EXPECT_EQ(c.params.omega, 3.0);
  EXPECT_TRUE(c.params.strict);
  EXPECT_TRUE(c.timing);
  EXPECT_EQ(c.csv_path, "a.csv");
  EXPECT_EQ(c.summary_path, "b.json");
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config(R"({"version": 1, "n": 10, "p": 0.5, "budget": {"erasers": 1}, "colour": 1})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"version": 2, "n": 10, "p": 0.5, "budget": {"erasers": 1}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"version": 1, "n": 10, "p": 1.5, "budget": {"erasers": 1}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"version": 1, "n": 10, "p": 0.5, "budget": {"erasers": 1},
                                "corrector": "greedy"})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"version": 1, "n": 10, "p": 0.5, "budget": {"erasers": 1},
                                "params": {"epsilon": 2}})"),
               ConfigError);
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"version": 1, "n": 10, "p": 0.05, "budget": {"rule": "predicted", "factor": 1}})"),
               ConfigError);
}

TEST(BudgetFor, Rules) {
  EXPECT_EQ(budget_for({BudgetRule::Kind::Fixed, 7, 1.0}, 10, 0.5), 7);
  EXPECT_EQ(budget_for({BudgetRule::Kind::PredictedTimes, 0, 2.5}, 16384, 0.5), 1576);
  EXPECT_THROW(budget_for({BudgetRule::Kind::PredictedTimes, 0, 1.0}, 10, 0.1), ConfigError);
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  ExperimentConfig c = parse_config(kBasic);
  const ExperimentResult a = run_experiment(c);
  c.threads = 1;
  const ExperimentResult b = run_experiment(c);
  EXPECT_EQ(rows_to_csv(a.rows, false), rows_to_csv(b.rows, false));
  EXPECT_EQ(summary_to_json(c, a.summary), summary_to_json(c, b.summary));
  EXPECT_EQ(a.summary.trials, 4u);
  EXPECT_DOUBLE_EQ(a.summary.win_rate, 1.0);
}

TEST(Experiment, EraserAccountingAddsUp) {
  const ExperimentResult r = run_experiment(parse_config(kBasic));
  for (const ReportRow& row : r.rows) {
    EXPECT_EQ(row.erasers_small + row.erasers_medium + row.erasers_large + row.erasers_other,
              row.erasers_total);
    EXPECT_EQ(row.erasers_other, 0u);
    EXPECT_LE(row.max_erasers_used, row.budget);
    ASSERT_TRUE(row.ratio.has_value());
    EXPECT_DOUBLE_EQ(*row.ratio, (row.max_erasers_used + 1) / *row.chi_asymptotic);
  }
}

TEST(Experiment, CsvHasNoTimingUnlessAsked) {
  const ExperimentResult r = run_experiment(parse_config(kBasic));
  const std::string plain = rows_to_csv(r.rows, false);
  EXPECT_EQ(plain.find("wall_ms"), std::string::npos);
  EXPECT_NE(rows_to_csv(r.rows, true).find("wall_ms"), std::string::npos);
}

TEST(Experiment, RatiosAbsentWhenNpAtMostOne) {
  ExperimentConfig c = parse_config(R"({"version": 1, "n": 50, "p": 0.01, "trials": 2,
      "budget": {"erasers": 3}, "corrector": "very-sparse", "threads": 1})");
  const ExperimentResult r = run_experiment(c);
  for (const ReportRow& row : r.rows) EXPECT_FALSE(row.ratio.has_value());
  EXPECT_FALSE(r.summary.ratio_mean.has_value());
  const auto j = nlohmann::json::parse(summary_to_json(c, r.summary));
  EXPECT_TRUE(j.at("ratio_mean").is_null());
}

TEST(Experiment, StrategyErrorsBecomeRows) {
  ExperimentConfig c = parse_config(R"({"version": 1, "n": 40, "p": 0.5, "trials": 2,
      "budget": {"erasers": 3}, "corrector": "very-sparse", "threads": 1,
      "params": {"degree_threshold": 1}})");
  const ExperimentResult r = run_experiment(c);
  EXPECT_EQ(r.summary.strategy_errors, 2u);
  EXPECT_EQ(r.rows[0].status, TrialStatus::StrategyError);
  EXPECT_FALSE(r.rows[0].note.empty());
}

TEST(RatioSweep, SinglePointIsNonIncreasing) {
  ExperimentConfig c = parse_config(kBasic);
  c.trials = 1;
  const SweepResult s = ratio_sweep(c, {300});
  ASSERT_EQ(s.points.size(), 1u);
  EXPECT_TRUE(s.non_increasing);
  EXPECT_NE(sweep_to_csv(s).find("300"), std::string::npos);
}

TEST(ChainCheck, SmallRunPasses) {
  const ChainReport r = chain_check(6, 100, 3);
  EXPECT_TRUE(r.pass());
  bool saw_k4 = false, saw_c5 = false;
  for (const ChainRow& row : r.rows) {
    if (row.name == "K4") {
      saw_k4 = true;
      EXPECT_EQ(row.chi_paint, 4);
    }
    if (row.name == "C5") {
      saw_c5 = true;
      EXPECT_EQ(row.chi, 3);
      EXPECT_EQ(row.chi_paint, 3);
    }
  }
  EXPECT_TRUE(saw_k4 && saw_c5);
  EXPECT_THROW(chain_check(13, 1, 1), ConfigError);
}

}  // namespace
}  // namespace paintlab
