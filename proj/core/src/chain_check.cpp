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

#include <cmath>
#include <sstream>

#include "paintlab/errors.hpp"
#include "paintlab/experiment.hpp"
#include "paintlab/families.hpp"
#include "paintlab/rng.hpp"

namespace paintlab {
namespace {

ChainRow check_one(const std::string& name, const Graph& g, const SolverLimits& limits) {
  ChainRow row;
  row.name = name;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  row.chi = chromatic_number(g, limits);
  row.chi_paint = paintability(g, limits);
  if (row.n <= limits.choose_max_vertices) {
    try {
      row.chi_list = choice_number(g, limits);
    } catch (const ResourceError&) {
      row.chi_list.reset();
    }
  }
  const int chi = std::max(row.chi, 1);
  row.upper = chi * std::log(static_cast<double>(std::max<std::size_t>(row.n, 1))) + 1.0;
  row.ok = row.chi <= row.chi_paint && row.chi_paint <= row.upper + 1e-9;
  if (row.chi_list) row.ok = row.ok && row.chi <= *row.chi_list && *row.chi_list <= row.chi_paint;
  return row;
}

}  // namespace

ChainReport chain_check(std::size_t n_max, std::size_t samples, std::uint64_t seed, SolverLimits limits) {
  const std::size_t cap = std::min(limits.paint_max_vertices, PaintabilitySolver::kPaintHardCap);
  if (n_max < 1 || n_max > cap) {
    throw ConfigError("chain-check n_max must lie in 1.." + std::to_string(cap));
  }
  ChainReport report;
  auto add = [&](const std::string& name, const Graph& g) {
    report.rows.push_back(check_one(name, g, limits));
    if (!report.rows.back().ok) ++report.violations;
  };
  const std::size_t family_max = std::min<std::size_t>(cap, 9);
  for (std::size_t n = 1; n <= std::min<std::size_t>(6, cap); ++n) add("K" + std::to_string(n), families::complete(n));
  for (std::size_t n = 1; n <= family_max; ++n) add("P" + std::to_string(n), families::path(n));
  for (std::size_t n = 3; n <= family_max; ++n) add("C" + std::to_string(n), families::cycle(n));
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = a; a + b <= std::min<std::size_t>(8, cap); ++b) {
      add("K" + std::to_string(a) + "," + std::to_string(b), families::complete_bipartite(a, b));
    }
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.below(n_max));
    const double p = 0.15 + 0.7 * rng.uniform01();
    const std::uint64_t graph_seed = rng.next();
    add("gnp(" + std::to_string(n) + ",seed=" + std::to_string(graph_seed) + ")", gnp(n, p, graph_seed));
  }
  return report;
}

std::string chain_to_csv(const ChainReport& report) {
  std::ostringstream out;
  out << "name,n,m,chi,chi_list,chi_paint,upper,ok\n";
  for (const ChainRow& r : report.rows) {
    char upper[32];
    std::snprintf(upper, sizeof upper, "%.6f", r.upper);
    out << '"' << r.name << "\"," << r.n << ',' << r.m << ',' << r.chi << ','
        << (r.chi_list ? std::to_string(*r.chi_list) : "") << ',' << r.chi_paint << ',' << upper << ','
        << (r.ok ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace paintlab
