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

#include "paintlab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "paintlab/errors.hpp"
#include "paintlab/registry.hpp"
#include "paintlab/rng.hpp"
#include "paintlab/theory.hpp"

namespace paintlab {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <class T>
T field(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

Regime regime_for(const std::string& corrector) {
  if (corrector == "sparse") return Regime::Sparse;
  if (corrector == "very-sparse" || corrector == "tree" || corrector == "unicyclic") return Regime::VerySparse;
  return Regime::Dense;
}

const char* status_text(const ReportRow& row) {
  return row.status == TrialStatus::StrategyError ? "strategy-error" : to_string(row.outcome);
}

}  // namespace

int budget_for(const BudgetRule& rule, std::size_t n, double p) {
  if (rule.kind == BudgetRule::Kind::Fixed) {
    if (rule.erasers < 0) throw ConfigError("fixed budget must be non-negative");
    return rule.erasers;
  }
  if (!(rule.factor > 0.0)) throw ConfigError("budget factor must be positive");
  double prediction = 0.0;
  try {
    prediction = chi_asymptotic(static_cast<double>(n), p);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("predicted budget undefined: ") + e.what());
  }
  return static_cast<int>(ceil_size(rule.factor * prediction));
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(doc,
                      {"version", "n", "p", "trials", "master_seed", "budget", "painter", "corrector",
                       "params", "threads", "timing", "output"},
                      "config");
  const int version = field<int>(doc, "version", "config");
  if (version != kConfigVersion) {
    throw ConfigError("unsupported config version " + std::to_string(version) + " (expected " +
                      std::to_string(kConfigVersion) + ")");
  }
  ExperimentConfig c;
  c.n = field<std::size_t>(doc, "n", "config");
  c.p = field<double>(doc, "p", "config");
  c.trials = doc.contains("trials") ? field<std::size_t>(doc, "trials", "config") : 1;
  c.master_seed = doc.contains("master_seed") ? field<std::uint64_t>(doc, "master_seed", "config") : 0;
  if (doc.contains("painter")) c.painter = field<std::string>(doc, "painter", "config");
  if (doc.contains("corrector")) c.corrector = field<std::string>(doc, "corrector", "config");
  if (doc.contains("threads")) c.threads = field<std::size_t>(doc, "threads", "config");
  if (doc.contains("timing")) c.timing = field<bool>(doc, "timing", "config");

  const json& budget = doc.contains("budget") ? doc.at("budget") : json::object();
  if (!budget.is_object()) throw ConfigError("config.budget must be an object");
  reject_unknown_keys(budget, {"rule", "erasers", "factor"}, "budget");
  const std::string rule = budget.contains("rule") ? field<std::string>(budget, "rule", "budget") : "fixed";
  if (rule == "fixed") {
    c.budget.kind = BudgetRule::Kind::Fixed;
    c.budget.erasers = field<int>(budget, "erasers", "budget");
  } else if (rule == "predicted") {
    c.budget.kind = BudgetRule::Kind::PredictedTimes;
    c.budget.factor = field<double>(budget, "factor", "budget");
  } else {
    throw ConfigError("budget.rule must be 'fixed' or 'predicted'");
  }

  c.params.regime = regime_for(c.corrector);
  if (doc.contains("params")) {
    const json& params = doc.at("params");
    if (!params.is_object()) throw ConfigError("config.params must be an object");
    reject_unknown_keys(params,
                        {"regime", "p", "omega", "epsilon", "c", "degree_threshold", "extraction_attempts",
                         "strict", "redraw_empty"},
                        "params");
    if (params.contains("regime")) {
      const auto regime = parse_regime(field<std::string>(params, "regime", "params"));
      if (!regime) throw ConfigError("params.regime must be dense, sparse or very-sparse");
      c.params.regime = *regime;
    }
    if (params.contains("p")) c.params.p = field<double>(params, "p", "params");
    if (params.contains("omega")) c.params.omega = field<double>(params, "omega", "params");
    if (params.contains("epsilon")) c.params.epsilon = field<double>(params, "epsilon", "params");
    if (params.contains("c")) c.params.c = field<double>(params, "c", "params");
    if (params.contains("degree_threshold")) {
      c.params.degree_threshold = field<std::size_t>(params, "degree_threshold", "params");
    }
    if (params.contains("extraction_attempts")) {
      c.params.extraction_attempts = field<std::size_t>(params, "extraction_attempts", "params");
    }
    if (params.contains("strict")) c.params.strict = field<bool>(params, "strict", "params");
    if (params.contains("redraw_empty")) c.params.redraw_empty = field<bool>(params, "redraw_empty", "params");
  }
  if (doc.contains("output")) {
    const json& output = doc.at("output");
    if (!output.is_object()) throw ConfigError("config.output must be an object");
    reject_unknown_keys(output, {"csv", "summary"}, "output");
    if (output.contains("csv")) c.csv_path = field<std::string>(output, "csv", "output");
    if (output.contains("summary")) c.summary_path = field<std::string>(output, "summary", "output");
  }
  validate(c);
  return c;
}

ExperimentConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate(const ExperimentConfig& c) {
  if (!(c.p >= 0.0 && c.p <= 1.0)) throw ConfigError("p must lie in [0,1]");
  if (c.trials < 1) throw ConfigError("trials must be at least 1");
  if (!is_known_painter(c.painter)) throw ConfigError("unknown painter '" + c.painter + "'");
  if (!is_known_corrector(c.corrector)) throw ConfigError("unknown corrector '" + c.corrector + "'");
  (void)budget_for(c.budget, c.n, c.p);
  const StrategyParams& s = c.params;
  if (s.p && !(*s.p > 0.0 && *s.p < 1.0)) throw ConfigError("params.p must lie in (0,1)");
  if (s.omega && !(*s.omega > 0.0)) throw ConfigError("params.omega must be positive");
  if (!(s.epsilon > 0.0 && s.epsilon < 1.0)) throw ConfigError("params.epsilon must lie in (0,1)");
  if (s.c && !(*s.c >= 0.99)) throw ConfigError("params.c must be at least 0.99");
  if (s.extraction_attempts < 1) throw ConfigError("params.extraction_attempts must be at least 1");
}

ReportRow run_trial(const ExperimentConfig& config, std::size_t trial) {
  const auto start = std::chrono::steady_clock::now();
  ReportRow row;
  row.trial = trial;
  row.seed = derive_seed(config.master_seed, trial);
  row.n = config.n;
  row.budget = budget_for(config.budget, config.n, config.p);
  const Graph g = gnp(config.n, config.p, derive_seed(row.seed, 0));
  row.m = g.edge_count();
  for (const Component& comp : components(g))
    if (comp.kind == ComponentClass::Complex) ++row.complex_components;

  StrategyParams params = config.params;
  if (!params.p && config.p > 0.0 && config.p < 1.0) params.p = config.p;
  const std::uint64_t painter_seed = derive_seed(row.seed, 1);
  const std::uint64_t corrector_seed = derive_seed(row.seed, 2);
  std::unique_ptr<CorrectorStrategy> corrector;
  std::unique_ptr<PainterStrategy> painter;
  try {
    corrector = make_corrector(config.corrector, g, params, corrector_seed);
    painter = make_painter(config.painter, g, row.budget, painter_seed);
  } catch (const StrategyError& e) {
    row.status = TrialStatus::StrategyError;
    row.note = e.what();
    return row;
  }
  const auto* classifying = dynamic_cast<const ClassifyingCorrector*>(corrector.get());

  PlayOptions options;
  options.painter_seed = painter_seed;
  options.corrector_seed = corrector_seed;
  options.on_round = [&](const GameState& state, const Round& round) {
    const std::vector<Vertex> erased = round.erased();
    std::size_t* bucket = &row.erasers_other;
    if (classifying && classifying->last_class()) {
      switch (*classifying->last_class()) {
        case SetClass::Small: bucket = &row.erasers_small; break;
        case SetClass::Medium: bucket = &row.erasers_medium; break;
        case SetClass::Large: bucket = &row.erasers_large; break;
      }
    }
    *bucket += erased.size();
    row.erasers_total += erased.size();
    for (Vertex v : erased) row.max_erasers_used = std::max(row.max_erasers_used, row.budget - state.erasers()[v]);
  };
  const Transcript t = play(g, row.budget, *painter, *corrector, options);
  row.outcome = t.outcome;
  row.rounds = t.rounds.size();
  row.note = t.note;
  if (classifying) row.fallbacks = classifying->fallbacks();
  if (config.p > 0.0 && config.p < 1.0 && static_cast<double>(config.n) * config.p > 1.0) {
    row.chi_asymptotic = chi_asymptotic(static_cast<double>(config.n), config.p);
    row.ratio = (row.max_erasers_used + 1) / *row.chi_asymptotic;
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

Summary summarize(const std::vector<ReportRow>& rows, int budget) {
  Summary s;
  s.trials = rows.size();
  s.budget = budget;
  double ratio_sum = 0.0;
  std::size_t ratio_count = 0;
  double rounds_sum = 0.0;
  std::size_t prevails = 0;
  for (const ReportRow& r : rows) {
    if (r.status == TrialStatus::StrategyError) {
      ++s.strategy_errors;
      continue;
    }
    if (r.outcome == Outcome::CorrectorWins) ++s.corrector_wins;
    if (r.outcome == Outcome::PainterWins) ++s.painter_wins;
    if (r.outcome == Outcome::PainterForfeit || r.outcome == Outcome::CorrectorForfeit) ++s.forfeits;
    if (corrector_prevails(r.outcome)) ++prevails;
    rounds_sum += static_cast<double>(r.rounds);
    s.max_erasers_used = std::max(s.max_erasers_used, r.max_erasers_used);
    if (r.ratio) {
      ratio_sum += *r.ratio;
      ++ratio_count;
      s.ratio_min = std::min(s.ratio_min.value_or(*r.ratio), *r.ratio);
      s.ratio_max = std::max(s.ratio_max.value_or(*r.ratio), *r.ratio);
    }
  }
  if (s.trials > 0) s.win_rate = static_cast<double>(prevails) / static_cast<double>(s.trials);
  const std::size_t played = s.trials - s.strategy_errors;
  if (played > 0) s.mean_rounds = rounds_sum / static_cast<double>(played);
  if (ratio_count > 0) s.ratio_mean = ratio_sum / static_cast<double>(ratio_count);
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  ExperimentResult result;
  result.rows.resize(config.trials);
  std::size_t workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        result.rows[t] = run_trial(config, t);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next = config.trials;
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  result.summary = summarize(result.rows, budget_for(config.budget, config.n, config.p));
  return result;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows, bool timing) {
  std::ostringstream out;
  out << "trial,seed,n,m,budget,outcome,rounds,max_erasers_used,erasers_total,erasers_small,"
         "erasers_medium,erasers_large,erasers_other,fallbacks,complex_components,chi_asymptotic,ratio";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const ReportRow& r : rows) {
    out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.budget << ',' << status_text(r) << ','
        << r.rounds << ',' << r.max_erasers_used << ',' << r.erasers_total << ',' << r.erasers_small << ','
        << r.erasers_medium << ',' << r.erasers_large << ',' << r.erasers_other << ',' << r.fallbacks << ','
        << r.complex_components << ',' << (r.chi_asymptotic ? number(*r.chi_asymptotic) : "") << ','
        << (r.ratio ? number(*r.ratio) : "");
    if (timing) out << ',' << number(r.wall_ms);
    out << '\n';
  }
  return out.str();
}

namespace {

ordered_json summary_object(const ExperimentConfig& c, const Summary& s) {
  ordered_json j;
  j["version"] = kConfigVersion;
  j["n"] = c.n;
  j["p"] = c.p;
  j["painter"] = c.painter;
  j["corrector"] = c.corrector;
  j["master_seed"] = c.master_seed;
  j["budget"] = s.budget;
  j["trials"] = s.trials;
  j["corrector_wins"] = s.corrector_wins;
  j["painter_wins"] = s.painter_wins;
  j["forfeits"] = s.forfeits;
  j["strategy_errors"] = s.strategy_errors;
  j["win_rate"] = s.win_rate;
  auto opt = [](const std::optional<double>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); };
  j["ratio_min"] = opt(s.ratio_min);
  j["ratio_mean"] = opt(s.ratio_mean);
  j["ratio_max"] = opt(s.ratio_max);
  j["mean_rounds"] = s.mean_rounds;
  j["max_erasers_used"] = s.max_erasers_used;
  j["asymptotic_baseline"] = "chi_asymptotic = n ln(1/(1-p)) / (2 ln(np))";
  return j;
}

}  // namespace

std::string summary_to_json(const ExperimentConfig& config, const Summary& summary) {
  return summary_object(config, summary).dump(2) + "\n";
}

std::string result_to_json(const ExperimentConfig& config, const ExperimentResult& result) {
  ordered_json j;
  j["summary"] = summary_object(config, result.summary);
  ordered_json rows = ordered_json::array();
  for (const ReportRow& r : result.rows) {
    ordered_json row;
    row["trial"] = r.trial;
    row["seed"] = r.seed;
    row["m"] = r.m;
    row["outcome"] = status_text(r);
    row["rounds"] = r.rounds;
    row["max_erasers_used"] = r.max_erasers_used;
    row["erasers_total"] = r.erasers_total;
    row["erasers_small"] = r.erasers_small;
    row["erasers_medium"] = r.erasers_medium;
    row["erasers_large"] = r.erasers_large;
    row["erasers_other"] = r.erasers_other;
    row["fallbacks"] = r.fallbacks;
    row["complex_components"] = r.complex_components;
    row["ratio"] = r.ratio ? ordered_json(*r.ratio) : ordered_json(nullptr);
    if (config.timing) row["wall_ms"] = r.wall_ms;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

SweepResult ratio_sweep(const ExperimentConfig& base, const std::vector<std::size_t>& n_list, double slack) {
  if (n_list.empty()) throw ConfigError("ratio_sweep needs at least one n");
  SweepResult sweep;
  sweep.slack = slack;
  for (std::size_t n : n_list) {
    ExperimentConfig c = base;
    c.n = n;
    sweep.points.push_back({n, run_experiment(c).summary});
  }
  for (std::size_t i = 1; i < sweep.points.size(); ++i) {
    const auto& prev = sweep.points[i - 1].summary.ratio_mean;
    const auto& cur = sweep.points[i].summary.ratio_mean;
    if (!prev || !cur || *cur > *prev * (1.0 + slack)) sweep.non_increasing = false;
  }
  return sweep;
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "n,trials,win_rate,ratio_mean,ratio_min,ratio_max,mean_rounds,budget\n";
  for (const SweepPoint& pt : sweep.points) {
    const Summary& s = pt.summary;
    out << pt.n << ',' << s.trials << ',' << number(s.win_rate) << ','
        << (s.ratio_mean ? number(*s.ratio_mean) : "") << ',' << (s.ratio_min ? number(*s.ratio_min) : "") << ','
        << (s.ratio_max ? number(*s.ratio_max) : "") << ',' << number(s.mean_rounds) << ',' << s.budget << '\n';
  }
  return out.str();
}

}  // namespace paintlab
