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

#include "paintlab/indset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "paintlab/errors.hpp"
#include "paintlab/rng.hpp"
#include "paintlab/vertex_set.hpp"

namespace paintlab {
namespace {

std::vector<Vertex> sorted_unique(std::span<const Vertex> s, std::size_t n) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= n) throw ParameterError("vertex set contains an unknown vertex");
  return out;
}

Vertex select_member(const VertexSet& set, std::uint64_t rank) {
  const auto words = set.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    const auto c = static_cast<std::uint64_t>(std::popcount(w));
    if (rank >= c) {
      rank -= c;
      continue;
    }
    for (; rank > 0; --rank) w &= w - 1;
    return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return 0;
}

// Greedy on sorted unique `s`; stops once `stop` vertices are taken (0 means
// run to maximality). Large sets use a bitset of candidates, small ones a
// compacted list; both draw the next vertex uniformly from the candidates.
std::vector<Vertex> greedy_run(const Graph& g, const std::vector<Vertex>& s, std::size_t stop,
                               Rng& rng) {
  std::vector<Vertex> taken;
  const std::size_t n = g.vertex_count();
  if (s.size() * 32 >= n) {
    VertexSet cand = VertexSet::of(n, s);
    std::size_t count = s.size();
    while (count > 0 && (stop == 0 || taken.size() < stop)) {
      const Vertex v = select_member(cand, rng.below(count));
      taken.push_back(v);
      cand.erase(v);
      g.remove_neighbors_from(v, cand);
      count = cand.count();
    }
  } else {
    std::vector<Vertex> cand = s;
    while (!cand.empty() && (stop == 0 || taken.size() < stop)) {
      const Vertex v = cand[rng.below(cand.size())];
      taken.push_back(v);
      std::size_t w = 0;
      for (Vertex u : cand)
        if (u != v && !g.adjacent(u, v)) cand[w++] = u;
      cand.resize(w);
    }
  }
  std::sort(taken.begin(), taken.end());
  return taken;
}

std::vector<Vertex> without(const std::vector<Vertex>& from, const std::vector<Vertex>& drop) {
  std::vector<Vertex> out;
  out.reserve(from.size() - std::min(from.size(), drop.size()));
  std::set_difference(from.begin(), from.end(), drop.begin(), drop.end(), std::back_inserter(out));
  return out;
}

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie strictly between 0 and 1");
}

// Extracts type-0 parts while at least s0 vertices remain. Returns false if
// an extraction fell short.
bool dense_phase(const Graph& g, std::vector<Vertex>& rest, double p, double s0, std::size_t attempts,
                 std::uint64_t seed, std::uint64_t& stream, Partition& out) {
  const std::size_t size = type_part_size(0, p);
  while (static_cast<double>(rest.size()) >= s0) {
    Extraction x = find_independent_of_size(g, rest, size, attempts, derive_seed(seed, stream++));
    if (x.report.fallback) return false;
    rest = without(rest, x.set);
    out.parts.push_back({std::move(x.set), 0});
  }
  return true;
}

}  // namespace

double k0_margin(std::size_t n, double p, std::size_t k) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double log_binom = std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0);
  return log_binom + kk * (kk - 1.0) / 2.0 * std::log1p(-p) - 4.0 * std::log(nn);
}

std::optional<std::size_t> k0(std::size_t n, double p) {
  check_probability(p);
  if (n == 0) throw ParameterError("k0 needs n >= 1");
  // The margin is concave in k: climb to the peak, then walk down the far side.
  std::size_t k = 1;
  double f = k0_margin(n, p, 1);
  while (k < n) {
    const double next = k0_margin(n, p, k + 1);
    if (next < f && f >= 0.0) break;
    if (next < f) return std::nullopt;
    ++k;
    f = next;
  }
  if (f < 0.0) return std::nullopt;
  while (k < n && k0_margin(n, p, k + 1) >= 0.0) ++k;
  return k;
}

std::vector<Vertex> greedy_independent_set(const Graph& g, std::span<const Vertex> s,
                                           std::uint64_t seed) {
  Rng rng(seed);
  return greedy_run(g, sorted_unique(s, g.vertex_count()), 0, rng);
}

Extraction find_independent_of_size(const Graph& g, std::span<const Vertex> s, std::size_t target,
                                    std::size_t max_attempts, std::uint64_t seed) {
  if (target == 0) throw ParameterError("extraction target must be at least 1");
  if (max_attempts == 0) throw ParameterError("extraction needs at least one attempt");
  const std::vector<Vertex> set = sorted_unique(s, g.vertex_count());
  Extraction best;
  best.report.requested = target;
  for (std::size_t a = 0; a < max_attempts; ++a) {
    Rng rng(derive_seed(seed, a));
    std::vector<Vertex> run = greedy_run(g, set, target, rng);
    best.report.attempts = a + 1;
    if (run.size() > best.set.size() || a == 0) best.set = std::move(run);
    if (best.set.size() >= target) break;
    if (best.set.size() == set.size()) break;  // S itself is independent
  }
  best.report.achieved = best.set.size();
  best.report.fallback = best.report.achieved < target;
  return best;
}

std::size_t ceil_size(double x) {
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

std::size_t type_part_size(int type, double p) {
  check_probability(p);
  if (type < 0) throw ParameterError("type index must be non-negative");
  if (type == 0) return ceil_size(1.0 / (9.0 * p));
  return ceil_size(type / (9.0 * p * std::ldexp(1.0, type)));
}

double partition_s0(std::size_t n, double p) {
  return 10.0 * std::log(static_cast<double>(n)) / p;
}

Partition medium_partition_dense(const Graph& g, std::span<const Vertex> s, double p,
                                 std::uint64_t seed, std::size_t attempts) {
  check_probability(p);
  Partition out;
  out.s0 = partition_s0(g.vertex_count(), p);
  std::vector<Vertex> rest = sorted_unique(s, g.vertex_count());
  std::uint64_t stream = 0;
  out.fallback = !dense_phase(g, rest, p, out.s0, attempts, seed, stream, out);
  out.leftover = std::move(rest);
  return out;
}

Partition medium_partition_typed(const Graph& g, std::span<const Vertex> s, double p, double omega,
                                 std::uint64_t seed, std::size_t attempts) {
  check_probability(p);
  if (!(omega > 0.0)) throw ParameterError("omega must be positive");
  const double n = static_cast<double>(g.vertex_count());
  Partition out;
  out.s0 = partition_s0(g.vertex_count(), p);
  std::vector<Vertex> rest = sorted_unique(s, g.vertex_count());
  std::uint64_t stream = 0;
  if (!dense_phase(g, rest, p, out.s0, attempts, seed, stream, out)) {
    out.fallback = true;
    out.leftover = std::move(rest);
    return out;
  }
  const double ln_n = std::log(n);
  const double stop = n * p / (omega * ln_n * ln_n);
  const int type_cap = n > 1.0 ? static_cast<int>(std::floor(ln_n / std::log(2.0))) : 0;
  while (!rest.empty() && static_cast<double>(rest.size()) > stop) {
    const double r = static_cast<double>(rest.size());
    int i = 1;
    while (std::ldexp(out.s0, -i) > r) ++i;
    if (i > type_cap) {
      out.fallback = true;
      break;
    }
    Extraction x = find_independent_of_size(g, rest, type_part_size(i, p), attempts,
                                            derive_seed(seed, stream++));
    if (x.report.fallback) {
      out.fallback = true;
      break;
    }
    rest = without(rest, x.set);
    out.parts.push_back({std::move(x.set), i});
    out.max_type = std::max(out.max_type, i);
  }
  out.leftover = std::move(rest);
  return out;
}

std::vector<double> type_weights(int max_type) {
  if (max_type < 1) throw ParameterError("type_weights needs M >= 1");
  double harmonic = 0.0;
  for (int j = 1; j <= max_type; ++j) harmonic += 1.0 / j;
  std::vector<double> q(static_cast<std::size_t>(max_type));
  for (int i = 1; i <= max_type; ++i) q[static_cast<std::size_t>(i - 1)] = (1.0 / i) / harmonic;
  return q;
}

PartitionCheck check_partition(const Graph& g, std::span<const Vertex> s, double p,
                               const Partition& partition) {
  PartitionCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.problem = std::move(why);
    return check;
  };
  const std::size_t n = g.vertex_count();
  VertexSet expected(n);
  for (Vertex v : s) {
    if (v >= n) return fail("input set contains an unknown vertex");
    expected.insert(v);
  }
  VertexSet seen(n);
  auto claim = [&](Vertex v) {
    if (v >= n || !expected.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
    return true;
  };
  int max_type = 0;
  for (std::size_t k = 0; k < partition.parts.size(); ++k) {
    const Part& part = partition.parts[k];
    for (Vertex v : part.vertices)
      if (!claim(v)) return fail("part " + std::to_string(k) + " overlaps or leaves the input set");
    if (!is_independent(g, part.vertices)) return fail("part " + std::to_string(k) + " is not independent");
    if (part.vertices.size() != type_part_size(part.type, p)) {
      return fail("part " + std::to_string(k) + " of type " + std::to_string(part.type) + " has size " +
                  std::to_string(part.vertices.size()));
    }
    max_type = std::max(max_type, part.type);
  }
  for (Vertex v : partition.leftover)
    if (!claim(v)) return fail("leftover overlaps a part or leaves the input set");
  if (!(seen == expected)) return fail("parts and leftover do not cover the input set");
  if (max_type != partition.max_type) return fail("recorded M differs from the largest part type");
  if (n > 1 && partition.max_type > std::log(static_cast<double>(n)) / std::log(2.0)) {
    return fail("M exceeds ln n / ln 2");
  }
  return check;
}

}  // namespace paintlab
