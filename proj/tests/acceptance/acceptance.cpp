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

// Acceptance suite: one pass/fail line per criterion.
//
//   paintlab_acceptance            run all criteria
//   paintlab_acceptance --only N   run criterion N

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "paintlab/errors.hpp"
#include "paintlab/experiment.hpp"
#include "paintlab/families.hpp"
#include "paintlab/game.hpp"
#include "paintlab/indset.hpp"
#include "paintlab/registry.hpp"
#include "paintlab/rng.hpp"
#include "paintlab/solver.hpp"
#include "paintlab/strategies.hpp"
#include "paintlab/theory.hpp"
#include "refute.hpp"

namespace paintlab {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << x;
  return out.str();
}

// 1 -------------------------------------------------------------------------

Verdict chain_suite() {
  const ChainReport r = chain_check(8, 300, 20260301);
  std::size_t random_rows = 0;
  std::size_t with_list = 0;
  for (const ChainRow& row : r.rows) {
    if (row.name.rfind("gnp(", 0) == 0) ++random_rows;
    if (row.chi_list) ++with_list;
  }
  const bool pass = r.pass() && random_rows == 300 && with_list > 0;
  return {pass, std::to_string(r.rows.size()) + " graphs (" + std::to_string(random_rows) + " random, " +
                    std::to_string(with_list) + " with chi_L), " + std::to_string(r.violations) + " violations"};
}

// 2 -------------------------------------------------------------------------

Verdict exact_values() {
  std::size_t checked = 0;
  std::vector<std::string> wrong;
  auto expect = [&](const std::string& name, bool ok) {
    ++checked;
    if (!ok) wrong.push_back(name);
  };
  for (std::size_t n = 1; n <= 6; ++n)
    expect("K" + std::to_string(n), paintability(families::complete(n)) == static_cast<int>(n));
  for (std::size_t n = 3; n <= 9; ++n)
    expect("C" + std::to_string(n), paintability(families::cycle(n)) == (n % 2 ? 3 : 2));
  for (std::size_t n = 2; n <= 9; ++n)
    for (const Graph& t : families::all_trees(n))
      expect("tree " + families::tree_code(t), paintability(t) == 2);
  for (std::size_t n = 3; n <= 8; ++n)
    for (const Graph& u : families::all_unicyclic(n))
      expect("unicyclic " + families::unicyclic_code(u), paintability(u) <= 3);
  std::string detail = std::to_string(checked) + " graphs, " + std::to_string(wrong.size()) + " wrong";
  if (!wrong.empty()) detail += " (first: " + wrong.front() + ")";
  return {wrong.empty(), detail};
}

// 3 -------------------------------------------------------------------------

Verdict strategy_soundness() {
  using Factory = std::function<std::unique_ptr<CorrectorStrategy>(const Graph&, std::uint64_t, bool)>;
  std::size_t graphs = 0;
  std::size_t runs = 0;
  std::size_t positions = 0;
  std::vector<std::string> losses;
  auto sweep = [&](const std::vector<Graph>& family, int budget, const Factory& make, const std::string& label) {
    for (const Graph& g : family) {
      ++graphs;
      oracle::ExhaustivePainter painter(g, budget);
      for (bool strict : {true, false}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
          const auto r = painter.run(*make(g, seed, strict));
          ++runs;
          positions += r.positions;
          if (r.refuted) losses.push_back(label + " n=" + std::to_string(g.vertex_count()) + ": " + r.reason);
        }
      }
    }
  };
  const Factory tree = [](const Graph& g, std::uint64_t s, bool strict) { return tree_corrector(g, s, strict); };
  const Factory uni = [](const Graph& g, std::uint64_t s, bool strict) { return unicyclic_corrector(g, s, strict); };
  for (std::size_t n = 1; n <= 9; ++n) sweep(families::all_trees(n), 1, tree, "tree");
  for (std::size_t n = 3; n <= 8; ++n) sweep(families::all_unicyclic(n), 2, uni, "unicyclic");
  std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(runs) +
                       " exhaustive adversary runs, " + std::to_string(positions) + " positions, " +
                       std::to_string(losses.size()) + " losses";
  if (!losses.empty()) detail += " (first: " + losses.front() + ")";
  return {losses.empty(), detail};
}

// 4 -------------------------------------------------------------------------

Verdict reduction_soundness() {
  const Graph k24 = families::complete_bipartite(2, 4);
  const auto lists = find_bad_list_assignment(k24, 2);
  if (!lists) return {false, "no bad 2-list assignment found for K2,4"};
  std::size_t games = 0;
  std::size_t painter_wins = 0;
  std::size_t forfeits = 0;
  for (const std::string& name : corrector_names()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ++games;
      std::unique_ptr<CorrectorStrategy> corrector;
      try {
        corrector = make_corrector(name, k24, {}, seed);
      } catch (const ParameterError&) {
        // The Corrector cannot play this graph at all.
        ++forfeits;
        ++painter_wins;
        continue;
      } catch (const StrategyError&) {
        ++forfeits;
        ++painter_wins;
        continue;
      }
      auto painter = list_adversary_painter(*lists);
      if (play(k24, 1, *painter, *corrector).outcome == Outcome::PainterWins) ++painter_wins;
    }
  }
  return {painter_wins == games, std::to_string(painter_wins) + "/" + std::to_string(games) +
                                     " Painter wins over " + std::to_string(corrector_names().size()) +
                                     " correctors (" + std::to_string(forfeits) + " refused the graph)"};
}

// 5 -------------------------------------------------------------------------

Verdict partition_contract() {
  const std::size_t n = 100000;
  const double ln_n = std::log(static_cast<double>(n));
  const double omega = std::max(1.5, std::log(ln_n));
  std::size_t invocations = 0;
  std::size_t invalid = 0;
  std::string first_problem;
  double lemma_fallback_rate = 1.0;
  std::size_t lemma_samples = 0;
  for (double p : {0.5, 0.05, 0.01}) {
    const Graph g = gnp(n, p, derive_seed(5, static_cast<std::uint64_t>(p * 1000)));
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    Rng rng(derive_seed(55, static_cast<std::uint64_t>(p * 1000)));
    const double lo = static_cast<double>(n) * p / (omega * ln_n * ln_n);
    const double hi = static_cast<double>(n) / (omega * ln_n * ln_n);
    auto sample = [&](std::size_t size) {
      rng.shuffle(std::span<Vertex>(all));
      std::vector<Vertex> s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
      std::sort(s.begin(), s.end());
      return s;
    };
    for (int i = 0; i < 200; ++i) {
      const auto size = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(lo + rng.uniform01() * (hi - lo))));
      const auto s = sample(std::min(size, n));
      for (bool typed : {false, true}) {
        const std::uint64_t seed = rng.next();
        const Partition part =
            typed ? medium_partition_typed(g, s, p, omega, seed) : medium_partition_dense(g, s, p, seed);
        const PartitionCheck check = check_partition(g, s, p, part);
        ++invocations;
        if (!check.ok) {
          ++invalid;
          if (first_problem.empty()) first_problem = check.problem;
        }
      }
    }
    if (p == 0.5) {
      const double s0 = partition_s0(n, p);
      const std::size_t target = type_part_size(0, p);
      std::size_t fallbacks = 0;
      for (int i = 0; i < 200; ++i) {
        const auto size = static_cast<std::size_t>(std::ceil(s0 * (1.0 + rng.uniform01())));
        const auto s = sample(size);
        const Extraction e = find_independent_of_size(g, s, target, kDefaultExtractionAttempts, rng.next());
        ++lemma_samples;
        if (e.report.fallback || !is_independent(g, e.set) || e.set.size() < target) ++fallbacks;
      }
      lemma_fallback_rate = static_cast<double>(fallbacks) / static_cast<double>(lemma_samples);
    }
  }
  const bool pass = invalid == 0 && lemma_fallback_rate <= 0.05;
  std::string detail = std::to_string(invocations - invalid) + "/" + std::to_string(invocations) +
                       " partitions valid; independent-set check fallback rate " + fmt(lemma_fallback_rate, 3) +
                       " over " + std::to_string(lemma_samples) + " sets";
  if (!first_problem.empty()) detail += " (first problem: " + first_problem + ")";
  return {pass, detail};
}

// 6 -------------------------------------------------------------------------

constexpr double kDenseRatioCeiling = 2.5;

Verdict dense_fixture() {
  ExperimentConfig c;
  c.n = 16384;
  c.p = 0.5;
  c.trials = 5;
  c.corrector = "dense";
  c.budget = {BudgetRule::Kind::PredictedTimes, 0, 2.5};
  c.threads = 1;
  const int budget = budget_for(c.budget, c.n, c.p);
  std::size_t games = 0;
  std::size_t wins = 0;
  double ratio_sum = 0.0;
  std::string per_painter;
  for (const char* painter : {"full-set", "random:0.5", "low-eraser"}) {
    c.painter = painter;
    c.master_seed = 6;
    const ExperimentResult r = run_experiment(c);
    games += r.summary.trials;
    wins += r.summary.corrector_wins;
    const double mean = r.summary.ratio_mean.value_or(INFINITY);
    ratio_sum += mean * static_cast<double>(r.summary.trials);
    per_painter += std::string(per_painter.empty() ? "" : ", ") + painter + " " + fmt(mean, 3);
  }
  const double mean_ratio = ratio_sum / static_cast<double>(games);
  const bool pass = wins == games && mean_ratio <= kDenseRatioCeiling;
  return {pass, "budget " + std::to_string(budget) + ", " + std::to_string(wins) + "/" + std::to_string(games) +
                    " Corrector wins, mean ratio " + fmt(mean_ratio, 3) + " <= " + fmt(kDenseRatioCeiling, 1) +
                    " (" + per_painter + ")"};
}

// 7 -------------------------------------------------------------------------

Verdict trend_check() {
  ExperimentConfig c;
  c.p = 0.5;
  c.n = 4096;
  c.trials = 3;
  c.master_seed = 7;
  c.corrector = "dense";
  c.painter = "full-set";
  c.budget = {BudgetRule::Kind::PredictedTimes, 0, 2.5};
  c.threads = 1;
  const SweepResult s = ratio_sweep(c, {4096, 8192, 16384}, 0.05);
  std::string ratios;
  for (const SweepPoint& pt : s.points) {
    ratios += std::string(ratios.empty() ? "" : ", ") + "n=" + std::to_string(pt.n) + " " +
              fmt(pt.summary.ratio_mean.value_or(NAN), 4);
  }
  return {s.non_increasing, "mean ratios " + ratios + " (slack 5%)"};
}

// 8 -------------------------------------------------------------------------

Verdict very_sparse_suite() {
  const std::size_t n = 3000;
  const double p = 0.5 / static_cast<double>(n);
  std::size_t clean = 0;
  std::size_t games = 0;
  std::size_t wins = 0;
  std::string first_loss;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::uint64_t seed = derive_seed(8, t);
    const Graph g = gnp(n, p, derive_seed(seed, 0));
    const auto comps = components(g);
    if (std::none_of(comps.begin(), comps.end(), [](const Component& c) { return c.kind == ComponentClass::Complex; }))
      ++clean;
    ColourLists lists(n);
    Rng list_rng(derive_seed(seed, 3));
    for (auto& l : lists) {
      for (int colour = 1; colour <= 5; ++colour)
        if (list_rng.uniform01() < 0.6) l.push_back(colour);
      if (l.empty()) l.push_back(1);
    }
    for (const char* name : {"full-set", "random:0.5", "random:0.1", "low-eraser", "list"}) {
      const std::string painter_name = name;
      auto corrector = very_sparse_corrector(g, {.regime = Regime::VerySparse, .p = p}, derive_seed(seed, 2));
      auto painter = painter_name == "list" ? list_adversary_painter(lists)
                                            : make_painter(painter_name, g, 2, derive_seed(seed, 1));
      const Transcript tr = play(g, 2, *painter, *corrector);
      ++games;
      if (corrector_prevails(tr.outcome)) {
        ++wins;
      } else if (first_loss.empty()) {
        first_loss = painter_name + " on trial " + std::to_string(t) + ": " + to_string(tr.outcome);
      }
    }
  }
  const bool pass = clean * 100 >= 95 * 50 && wins == games;
  std::string detail = std::to_string(clean) + "/50 graphs without complex components; " + std::to_string(wins) +
                       "/" + std::to_string(games) + " Corrector wins at budget 2";
  if (!first_loss.empty()) detail += " (first loss: " + first_loss + ")";
  return {pass, detail};
}

// 9 -------------------------------------------------------------------------

// ln C(n,k) + C(k,2) ln(1-p) - 4 ln n in long double via lgamma, kept apart
// from the library's own evaluation.
long double reference_margin(std::size_t n, double p, std::size_t k) {
  const long double nn = n;
  const long double kk = k;
  return std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1) +
         kk * (kk - 1) / 2 * std::log1p(-static_cast<long double>(p)) - 4 * std::log(nn);
}

Verdict numeric_identities() {
  std::vector<std::string> failures;
  for (int i = 1; i <= 40; ++i) {
    const double x = std::ldexp(1.0, i) / i;
    if (!(phi(x) >= std::ldexp(1.0, i) / 4)) failures.push_back("phi at i=" + std::to_string(i));
  }
  const double below = constant_factor(std::nextafter(4.0, 0.0));
  const double at = constant_factor(4.0);
  const double above = constant_factor(4.0 + 1e-9);
  if (std::abs(below - at) > 1e-6 || std::abs(above - at) > 1e-6) failures.push_back("constant_factor jump at 4");
  std::size_t identities = 0;
  for (double n : {100.0, 1e3, 16384.0, 1e5, 1e6, 1e9}) {
    for (double p : {0.001, 0.01, 0.05, 0.1, 0.5, 0.9}) {
      if (n * p <= 1.0) continue;
      const double b = 1.0 / (1.0 - p);
      const double expected = n / (2.0 * std::log(n * p) / std::log(b));
      ++identities;
      if (std::abs(chi_asymptotic(n, p) / expected - 1.0) > 1e-9)
        failures.push_back("chi_asymptotic at n=" + fmt(n, 0) + " p=" + fmt(p, 3));
    }
  }
  std::size_t k0_cases = 0;
  for (std::size_t n : {50u, 100u, 1000u, 10000u, 16384u, 100000u, 1000000u}) {
    for (double p : {0.5, 0.1, 0.05, 0.01}) {
      const auto k = k0(n, p);
      if (!k) continue;
      ++k0_cases;
      if (!(reference_margin(n, p, *k) >= 0 && reference_margin(n, p, *k + 1) < 0))
        failures.push_back("k0 at n=" + std::to_string(n) + " p=" + fmt(p, 2));
    }
  }
  std::string detail = "phi for i=1..40, constant_factor at C=4, " + std::to_string(identities) +
                       " chi_asymptotic identities, " + std::to_string(k0_cases) + " k0 cases; " +
                       std::to_string(failures.size()) + " failures";
  if (!failures.empty()) detail += " (first: " + failures.front() + ")";
  return {failures.empty(), detail};
}

// 10 ------------------------------------------------------------------------

#ifdef PAINTLAB_CLI
std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Verdict cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("paintlab_determinism_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = PAINTLAB_CLI;
  {
    std::ofstream cfg(dir / "sim.json");
    cfg << R"({"version": 1, "n": 400, "p": 0.3, "trials": 3, "master_seed": 9,
               "budget": {"rule": "fixed", "erasers": 400}, "painter": "random:0.5",
               "corrector": "dense", "threads": 2,
               "output": {"csv": ")" << (dir / "sim_rows.csv").string() << R"(", "summary": ")"
        << (dir / "sim_summary.json").string() << R"("}})";
    std::ofstream sweep(dir / "sweep.json");
    sweep << R"({"version": 1, "n": 200, "p": 0.5, "trials": 2, "master_seed": 3,
                 "budget": {"rule": "predicted", "factor": 2.5}, "painter": "full-set",
                 "corrector": "dense", "threads": 1})";
  }
  const std::vector<std::pair<std::string, std::string>> commands{
      {"gen", "gen --n 300 --p 0.1 --seed 4"},
      {"solve", "solve --family petersen --no-list"},
      {"play", "play --n 200 --p 0.2 --seed 5 --budget 50 --painter random:0.4 --corrector dense"},
      {"simulate", "simulate --config " + (dir / "sim.json").string()},
      {"ratio-sweep", "ratio-sweep --config " + (dir / "sweep.json").string() + " --n-list 100,200"},
      {"chain-check", "chain-check --n-max 5 --samples 20 --seed 2"},
      {"predict", "predict --n 1e6 --p 0.001 --format json"},
      {"verify-partition", "verify-partition --n 3000 --p 0.1 --invocations 10 --mode typed --seed 1"},
  };
  std::vector<std::string> differing;
  for (const auto& [name, args] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (name + "_" + std::to_string(run) + ".out");
      const std::string cmd = cli + " " + args + " --out " + out.string() + " 2>/dev/null";
      const int status = std::system(cmd.c_str());
      outputs[run] = "exit " + std::to_string(status) + "\n" + slurp(out);
      if (name == "simulate") {
        outputs[run] += slurp(dir / "sim_rows.csv") + slurp(dir / "sim_summary.json");
        fs::remove(dir / "sim_rows.csv");
        fs::remove(dir / "sim_summary.json");
      }
    }
    if (outputs[0] != outputs[1] || outputs[0].rfind("exit 0\n", 0) != 0 || outputs[0].size() <= 7)
      differing.push_back(name);
  }
  fs::remove_all(dir);
  std::string detail = std::to_string(commands.size() - differing.size()) + "/" + std::to_string(commands.size()) +
                       " subcommands byte-identical on re-run";
  if (!differing.empty()) detail += " (differs or failed: " + differing.front() + ")";
  return {differing.empty(), detail};
}
#else
Verdict cli_determinism() { return {false, "built without the command-line tool"}; }
#endif

struct Criterion {
  int id;
  const char* name;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {1, "chain chi <= chi_L <= chi_P <= chi ln n + 1", chain_suite},
    {2, "exact paint numbers on small families", exact_values},
    {3, "tree and unicyclic correctors vs exhaustive Painter", strategy_soundness},
    {4, "K2,4 list adversary beats every corrector", reduction_soundness},
    {5, "medium-set partition contract on G(1e5, p)", partition_contract},
    {6, "dense simulation fixture n=16384", dense_fixture},
    {7, "ratio trend over n = 4096, 8192, 16384", trend_check},
    {8, "very sparse suite n=3000, p=0.5/n", very_sparse_suite},
    {9, "numeric identities", numeric_identities},
    {10, "CLI determinism", cli_determinism},
};

}  // namespace
}  // namespace paintlab

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: paintlab_acceptance [--only N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : paintlab::kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    paintlab::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << v.detail << " ["
              << paintlab::fmt(secs, 1) << " s]" << std::endl;
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}
