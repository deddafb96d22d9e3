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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "paintlab/errors.hpp"
#include "paintlab/experiment.hpp"
#include "paintlab/families.hpp"
#include "paintlab/game.hpp"
#include "paintlab/graph.hpp"
#include "paintlab/graph_io.hpp"
#include "paintlab/indset.hpp"
#include "paintlab/registry.hpp"
#include "paintlab/rng.hpp"
#include "paintlab/solver.hpp"
#include "paintlab/theory.hpp"

namespace {

using namespace paintlab;
using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kFailure = 1, kConfig = 2, kVerdict = 3, kResource = 4 };

struct Common {
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  std::string format;  // empty: json for solve and predict, csv otherwise
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + c.out + "'");
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << text;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

struct GraphSource {
  std::string file;
  std::string family;
  std::size_t n = 0;
  double p = -1.0;
  std::uint64_t graph_seed = 0;
  bool have_graph_seed = false;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.file, "Edge-list file");
  cmd->add_option("--family", src.family, "Named graph: K5, P7, C9, K2,4, S4, E3, petersen");
  cmd->add_option("--n", src.n, "Vertices of a random graph");
  cmd->add_option("--p", src.p, "Edge probability of a random graph");
}

Graph load_graph(const GraphSource& src, std::uint64_t seed) {
  const int given = !src.file.empty() + !src.family.empty() + (src.p >= 0.0);
  if (given != 1) throw ConfigError("give exactly one of --graph, --family or --n/--p");
  if (!src.file.empty()) {
    try {
      return read_edge_list_file(src.file);
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
  }
  if (!src.family.empty()) {
    try {
      return families::by_name(src.family);
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
  }
  if (src.p > 1.0) throw ConfigError("--p must lie in [0,1]");
  return gnp(src.n, src.p, seed);
}

std::string row_or_blank(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

// gen ------------------------------------------------------------------------

int run_gen(const Common& c, const GraphSource& src) {
  emit(c, to_edge_list(load_graph(src, c.seed)));
  return kOk;
}

// solve ----------------------------------------------------------------------

int run_solve(const Common& c, const GraphSource& src, const SolverLimits& limits, bool skip_list) {
  const Graph g = load_graph(src, c.seed);
  const int chi = chromatic_number(g, limits);
  const int chi_paint = paintability(g, limits);
  std::optional<int> chi_list;
  if (!skip_list) chi_list = choice_number(g, limits);
  if (c.format == "json") {
    ordered_json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["chi"] = chi;
    out["chi_list"] = chi_list ? ordered_json(*chi_list) : ordered_json(nullptr);
    out["chi_paint"] = chi_paint;
    emit(c, out.dump(2) + "\n");
  } else {
    emit(c, "n,m,chi,chi_list,chi_paint\n" + std::to_string(g.vertex_count()) + "," +
                std::to_string(g.edge_count()) + "," + std::to_string(chi) + "," + row_or_blank(chi_list) + "," +
                std::to_string(chi_paint) + "\n");
  }
  return kOk;
}

// play -----------------------------------------------------------------------

struct PlayArgs {
  int budget = 1;
  std::string painter = "full-set";
  std::string corrector = "maximal-is";
  std::string regime;
  bool strict = false;
};

int run_play(const Common& c, const GraphSource& src, const PlayArgs& a, const SolverLimits& limits) {
  const Graph g = load_graph(src, derive_seed(c.seed, 0));
  if (a.budget < 0) throw ConfigError("--budget must be non-negative");
  if (!is_known_painter(a.painter)) throw ConfigError("unknown painter '" + a.painter + "'");
  if (!is_known_corrector(a.corrector)) throw ConfigError("unknown corrector '" + a.corrector + "'");
  StrategyParams params;
  params.strict = a.strict;
  if (a.corrector == "sparse") params.regime = Regime::Sparse;
  if (a.corrector == "very-sparse") params.regime = Regime::VerySparse;
  if (src.p > 0.0 && src.p < 1.0) params.p = src.p;
  const std::uint64_t painter_seed = derive_seed(c.seed, 1);
  const std::uint64_t corrector_seed = derive_seed(c.seed, 2);
  std::unique_ptr<CorrectorStrategy> corrector;
  std::unique_ptr<PainterStrategy> painter;
  try {
    corrector = make_corrector(a.corrector, g, params, corrector_seed, limits);
    painter = make_painter(a.painter, g, a.budget, painter_seed, limits);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  PlayOptions options;
  options.painter_seed = painter_seed;
  options.corrector_seed = corrector_seed;
  const Transcript t = play(g, a.budget, *painter, *corrector, options);
  emit(c, to_jsonl(t));
  std::cerr << "outcome: " << to_string(t.outcome) << " after " << t.rounds.size() << " rounds\n";
  return kOk;
}

// simulate / ratio-sweep -----------------------------------------------------

ExperimentConfig load_config(const Common& c, bool seed_given) {
  if (c.config.empty()) throw ConfigError("--config is required");
  ExperimentConfig config = read_config(c.config);
  if (seed_given) config.master_seed = c.seed;
  validate(config);
  return config;
}

int run_simulate(const Common& c, bool seed_given, double require_win_rate) {
  const ExperimentConfig config = load_config(c, seed_given);
  const ExperimentResult result = run_experiment(config);
  const std::string csv = rows_to_csv(result.rows, config.timing);
  if (!config.csv_path.empty()) write_file(config.csv_path, csv);
  if (!config.summary_path.empty()) write_file(config.summary_path, summary_to_json(config, result.summary));
  emit(c, c.format == "json" ? result_to_json(config, result) : csv);
  const Summary& s = result.summary;
  std::cerr << "trials " << s.trials << ", win rate " << fmt(s.win_rate);
  if (s.ratio_mean) std::cerr << ", mean ratio " << fmt(*s.ratio_mean);
  std::cerr << "\n";
  return s.win_rate + 1e-12 < require_win_rate ? kVerdict : kOk;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ConfigError("--n-list: '" + item + "' is not a vertex count");
    }
  }
  if (out.empty()) throw ConfigError("--n-list is empty");
  return out;
}

int run_sweep(const Common& c, bool seed_given, const std::string& n_list, double slack) {
  const ExperimentConfig config = load_config(c, seed_given);
  const SweepResult sweep = ratio_sweep(config, parse_n_list(n_list), slack);
  if (c.format == "json") {
    ordered_json out;
    out["non_increasing"] = sweep.non_increasing;
    out["slack"] = sweep.slack;
    out["points"] = ordered_json::array();
    for (const SweepPoint& pt : sweep.points) {
      ordered_json row;
      row["n"] = pt.n;
      row["win_rate"] = pt.summary.win_rate;
      row["ratio_mean"] = pt.summary.ratio_mean ? ordered_json(*pt.summary.ratio_mean) : ordered_json(nullptr);
      row["budget"] = pt.summary.budget;
      out["points"].push_back(row);
    }
    emit(c, out.dump(2) + "\n");
  } else {
    emit(c, sweep_to_csv(sweep));
  }
  std::cerr << (sweep.non_increasing ? "non-increasing" : "INCREASING") << " within " << fmt(slack * 100) << "%\n";
  return sweep.non_increasing ? kOk : kVerdict;
}

// chain-check ----------------------------------------------------------------

int run_chain(const Common& c, std::size_t n_max, std::size_t samples, const SolverLimits& limits) {
  const ChainReport report = chain_check(n_max, samples, c.seed, limits);
  if (c.format == "json") {
    ordered_json out;
    out["rows"] = report.rows.size();
    out["violations"] = report.violations;
    out["failed"] = ordered_json::array();
    for (const ChainRow& r : report.rows)
      if (!r.ok) out["failed"].push_back(r.name);
    emit(c, out.dump(2) + "\n");
  } else {
    emit(c, chain_to_csv(report));
  }
  std::cerr << report.rows.size() << " graphs, " << report.violations << " violations\n";
  return report.pass() ? kOk : kVerdict;
}

// predict --------------------------------------------------------------------

int run_predict(const Common& c, double n, double p, double omega) {
  RegimeBounds b;
  try {
    b = regime_bounds(n, p, omega);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (c.format == "json") {
    emit(c, to_json(b) + "\n");
    return kOk;
  }
  emit(c,
       "n,p,omega,b,chi_asymptotic,k0_asymptotic,log_exponent,constant_factor,s0,large_threshold,small_threshold\n" +
           fmt(b.n) + "," + fmt(b.p) + "," + fmt(b.omega) + "," + fmt(b.b) + "," + fmt(b.chi_asymptotic) + "," +
           fmt(b.k0_asymptotic) + "," + fmt(b.log_exponent) + "," +
           (b.constant_factor ? fmt(*b.constant_factor) : "") + "," + fmt(b.s0) + "," + fmt(b.large_threshold) +
           "," + fmt(b.small_threshold) + "\n");
  return kOk;
}

// verify-partition -----------------------------------------------------------

int run_verify_partition(const Common& c, std::size_t n, double p, std::size_t invocations, const std::string& mode,
                         double omega) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("--p must lie in (0,1)");
  if (n < 2) throw ConfigError("--n must be at least 2");
  if (mode != "dense" && mode != "typed") throw ConfigError("--mode must be dense or typed");
  if (omega <= 0.0) omega = std::max(1.5, std::log(std::log(static_cast<double>(n))));
  const Graph g = gnp(n, p, derive_seed(c.seed, 0));
  const double ln_n = std::log(static_cast<double>(n));
  const double lo = static_cast<double>(n) * p / (omega * ln_n * ln_n);
  const double hi = static_cast<double>(n) / (omega * ln_n * ln_n);
  Rng rng(derive_seed(c.seed, 1));
  std::ostringstream csv;
  csv << "invocation,size,parts,leftover,max_type,fallback,ok,problem\n";
  std::size_t failures = 0;
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  for (std::size_t i = 0; i < invocations; ++i) {
    const double u = rng.uniform01();
    const auto size = std::clamp<std::size_t>(static_cast<std::size_t>(lo + u * (hi - lo)), 1, n);
    rng.shuffle(std::span<Vertex>(all));
    std::vector<Vertex> s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    const std::uint64_t seed = rng.next();
    const Partition part =
        mode == "dense" ? medium_partition_dense(g, s, p, seed) : medium_partition_typed(g, s, p, omega, seed);
    const PartitionCheck check = check_partition(g, s, p, part);
    if (!check.ok) ++failures;
    csv << i << ',' << size << ',' << part.parts.size() << ',' << part.leftover.size() << ',' << part.max_type << ','
        << (part.fallback ? "true" : "false") << ',' << (check.ok ? "true" : "false") << ",\"" << check.problem
        << "\"\n";
  }
  if (c.format == "json") {
    ordered_json out;
    out["n"] = n;
    out["p"] = p;
    out["mode"] = mode;
    out["invocations"] = invocations;
    out["failures"] = failures;
    emit(c, out.dump(2) + "\n");
  } else {
    emit(c, csv.str());
  }
  std::cerr << invocations << " partitions, " << failures << " invalid\n";
  return failures == 0 ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paintlab: the Paint-Correct game on random graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "paintlab 0.1.0");

  Common common;
  bool seed_given = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option_function<std::uint64_t>(
        "--seed",
        [&](const std::uint64_t& s) {
          common.seed = s;
          seed_given = true;
        },
        "Master seed");
    cmd->add_option("--config", common.config, "JSON experiment config");
    cmd->add_option("--out", common.out, "Output file (default: stdout)");
    cmd->add_option("--format", common.format, "Output format (csv or json)")->check(CLI::IsMember({"csv", "json"}));
  };

  SolverLimits limits;
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--paint-cap", limits.paint_max_vertices, "Vertex cap of the paintability solver");
    cmd->add_option("--choose-cap", limits.choose_max_vertices, "Vertex cap of the choosability search");
  };

  GraphSource src;

  auto* gen = app.add_subcommand("gen", "Write a graph as an edge list");
  add_common(gen);
  add_graph_options(gen, src);

  bool skip_list = false;
  auto* solve = app.add_subcommand("solve", "Exact chi, chi_L and chi_P of a small graph");
  add_common(solve);
  add_graph_options(solve, src);
  add_limits(solve);
  solve->add_flag("--no-list", skip_list, "Skip the choice number");

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "Play one game and write the transcript as JSONL");
  add_common(play_cmd);
  add_graph_options(play_cmd, src);
  add_limits(play_cmd);
  play_cmd->add_option("--budget", play_args.budget, "Erasers per vertex");
  play_cmd->add_option("--painter", play_args.painter, "full-set, random:<q>, low-eraser, list:<file>, optimal");
  play_cmd->add_option("--corrector", play_args.corrector,
                       "dense, sparse, very-sparse, tree, unicyclic, maximal-is, optimal");
  play_cmd->add_flag("--strict", play_args.strict, "Keep only what the rule selects");

  double require_win_rate = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run a batch of seeded games from a config");
  add_common(simulate);
  simulate->add_option("--require-win-rate", require_win_rate, "Exit 3 below this Corrector win rate");

  std::string n_list;
  double slack = 0.05;
  auto* sweep = app.add_subcommand("ratio-sweep", "Mean ratio against n with the config otherwise fixed");
  add_common(sweep);
  sweep->add_option("--n-list", n_list, "Comma-separated vertex counts")->required();
  sweep->add_option("--slack", slack, "Allowed relative increase");

  std::size_t n_max = 6;
  std::size_t samples = 100;
  auto* chain = app.add_subcommand("chain-check", "Check chi <= chi_L <= chi_P <= chi ln n + 1");
  add_common(chain);
  add_limits(chain);
  chain->add_option("--n-max", n_max, "Largest random graph");
  chain->add_option("--samples", samples, "Random graphs");

  double pn = 0.0;
  double pp = 0.0;
  double omega = 0.0;
  auto* predict = app.add_subcommand("predict", "Asymptotic quantities for (n, p)");
  add_common(predict);
  predict->add_option("--n", pn, "Vertices")->required();
  predict->add_option("--p", pp, "Edge probability")->required();
  predict->add_option("--omega", omega, "Class threshold slack (default max(1.5, ln ln n))");

  std::size_t vn = 0;
  double vp = 0.0;
  std::size_t invocations = 20;
  std::string mode = "dense";
  auto* verify = app.add_subcommand("verify-partition", "Check medium-set partitions on a random graph");
  add_common(verify);
  verify->add_option("--n", vn, "Vertices")->required();
  verify->add_option("--p", vp, "Edge probability")->required();
  verify->add_option("--invocations", invocations, "Partitions to check");
  verify->add_option("--mode", mode, "dense or typed");
  verify->add_option("--omega", omega, "Class threshold slack");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  if (common.format.empty()) common.format = *solve || *predict ? "json" : "csv";

  try {
    if (*gen) return run_gen(common, src);
    if (*solve) return run_solve(common, src, limits, skip_list);
    if (*play_cmd) return run_play(common, src, play_args, limits);
    if (*simulate) return run_simulate(common, seed_given, require_win_rate);
    if (*sweep) return run_sweep(common, seed_given, n_list, slack);
    if (*chain) return run_chain(common, n_max, samples, limits);
    if (*predict) {
      if (omega <= 0.0) omega = std::max(1.5, std::log(std::log(pn)));
      return run_predict(common, pn, pp, omega);
    }
    if (*verify) return run_verify_partition(common, vn, vp, invocations, mode, omega);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParameterError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
