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

#include "peeling.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "paintlab/errors.hpp"
#include "paintlab/strategies.hpp"
#include "paintlab/vertex_set.hpp"

namespace paintlab {
namespace detail {

std::vector<Vertex> finalize_response(const GameView& view, std::span<const Vertex> pending,
                                      std::span<const Vertex> anchor, bool extend, Rng& rng) {
  const Graph& g = view.graph;
  const std::size_t n = g.vertex_count();
  VertexSet kept(n);
  VertexSet blocked(n);
  std::vector<Vertex> out;
  auto take = [&](Vertex v) {
    out.push_back(v);
    kept.insert(v);
    g.add_neighbors_to(v, blocked);
  };
  for (Vertex v : pending)
    if (view.erasers[v] == 0) take(v);
  VertexSet presented = VertexSet::of(n, pending);
  for (Vertex a : anchor)
    if (a < n && presented.contains(a) && !kept.contains(a) && !blocked.contains(a)) take(a);
  if (extend) {
    std::vector<Vertex> order(pending.begin(), pending.end());
    rng.shuffle(std::span<Vertex>(order));
    for (Vertex v : order)
      if (!kept.contains(v) && !blocked.contains(v)) take(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PeelingKeeper::PeelingKeeper(const Graph& h, bool forest_only)
    : parent_(h.vertex_count(), kRoot),
      rank_(h.vertex_count(), 0),
      cycle_of_(h.vertex_count(), -1),
      kept_(h.vertex_count(), 0) {
  std::vector<std::size_t> deg(h.vertex_count());
  std::vector<char> seen(h.vertex_count(), 0);
  for (const Component& comp : components(h)) {
    if (comp.kind == ComponentClass::Complex || (forest_only && comp.kind != ComponentClass::Tree)) {
      throw ParameterError(std::string("component of ") + std::to_string(comp.vertices.size()) +
                           " vertices is " + to_string(comp.kind) + ", not supported by this strategy");
    }
    std::deque<Vertex> queue;
    std::uint64_t next_rank = 0;
    if (comp.kind == ComponentClass::Tree) {
      queue.push_back(comp.vertices.front());
      seen[comp.vertices.front()] = 1;
    } else {
      // Peel leaves; what survives is the cycle.
      std::vector<Vertex> leaves;
      for (Vertex v : comp.vertices) {
        deg[v] = h.degree(v);
        if (deg[v] == 1) leaves.push_back(v);
      }
      while (!leaves.empty()) {
        const Vertex v = leaves.back();
        leaves.pop_back();
        deg[v] = 0;
        h.for_each_neighbor(v, [&](Vertex u) {
          if (deg[u] > 0 && --deg[u] == 1) leaves.push_back(u);
        });
      }
      Cycle cycle;
      Vertex start = comp.vertices.front();
      for (Vertex v : comp.vertices) {
        if (deg[v] >= 2) {
          start = v;
          break;
        }
      }
      std::int64_t prev = -1;
      Vertex at = start;
      do {
        cycle.ring.push_back(at);
        Vertex step = at;
        h.for_each_neighbor(at, [&](Vertex u) {
          if (step == at && deg[u] >= 2 && static_cast<std::int64_t>(u) != prev) step = u;
        });
        prev = at;
        at = step;
      } while (at != start);
      const auto index = static_cast<std::int32_t>(cycles_.size());
      for (std::size_t i = 0; i < cycle.ring.size(); ++i) {
        const Vertex v = cycle.ring[i];
        cycle_of_[v] = index;
        rank_[v] = i;
        seen[v] = 1;
        queue.push_back(v);
      }
      next_rank = cycle.ring.size();
      cycles_.push_back(std::move(cycle));
    }
    for (Vertex v : queue) rank_[v] = cycle_of_[v] >= 0 ? rank_[v] : next_rank++;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      h.for_each_neighbor(v, [&](Vertex u) {
        if (seen[u]) return;
        seen[u] = 1;
        parent_[u] = v;
        rank_[u] = next_rank++;
        queue.push_back(u);
      });
    }
  }
}

void PeelingKeeper::open(Cycle& cycle, Vertex x) {
  const std::size_t len = cycle.ring.size();
  const auto at = static_cast<std::size_t>(std::find(cycle.ring.begin(), cycle.ring.end(), x) - cycle.ring.begin());
  for (std::size_t j = 1; j < len; ++j) {
    const Vertex v = cycle.ring[(at + j) % len];
    parent_[v] = j == 1 ? kRoot : static_cast<std::int64_t>(cycle.ring[(at + j - 1) % len]);
    rank_[v] = j - 1;
  }
  parent_[x] = kRoot;
  cycle.opened = true;
}

std::vector<Vertex> PeelingKeeper::keep(std::span<const Vertex> presented, Rng& rng) {
  std::vector<Vertex> rest;
  std::vector<Vertex> kept;
  std::map<std::int32_t, std::vector<Vertex>> opening;
  for (Vertex v : presented) {
    const std::int32_t c = cycle_of_[v];
    if (c >= 0 && !cycles_[static_cast<std::size_t>(c)].opened) {
      opening[c].push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  for (auto& [c, members] : opening) {
    const Vertex x = members[rng.below(members.size())];
    open(cycles_[static_cast<std::size_t>(c)], x);
    kept_[x] = 1;
    kept.push_back(x);
  }
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
  for (Vertex v : rest) {
    const std::int64_t p = parent_[v];
    if (p == kRoot || !kept_[static_cast<std::size_t>(p)]) {
      kept_[v] = 1;
      kept.push_back(v);
    }
  }
  for (Vertex v : kept) kept_[v] = 0;
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace detail

namespace {

class PeelingCorrector final : public CorrectorStrategy {
 public:
  PeelingCorrector(const Graph& g, bool forest_only, std::uint64_t seed, bool strict)
      : keeper_(g, forest_only), rng_(seed), strict_(strict), name_(forest_only ? "tree" : "unicyclic") {}
  std::string name() const override { return name_; }
  std::unique_ptr<CorrectorStrategy> clone() const override { return std::make_unique<PeelingCorrector>(*this); }

  std::vector<Vertex> respond(const GameView& view, std::span<const Vertex> pending) override {
    const std::vector<Vertex> anchor = keeper_.keep(pending, rng_);
    return detail::finalize_response(view, pending, anchor, !strict_, rng_);
  }

 private:
  detail::PeelingKeeper keeper_;
  Rng rng_;
  bool strict_;
  std::string name_;
};

detail::PeelingKeeper checked_core_keeper(const Graph& h) {
  for (const Component& comp : components(h)) {
    if (comp.kind == ComponentClass::Complex) {
      throw StrategyError("very-sparse: the high-degree subgraph has a complex component (" +
                          std::to_string(comp.vertices.size()) + " vertices, " +
                          std::to_string(comp.edge_count) + " edges)");
    }
  }
  return detail::PeelingKeeper(h, false);
}

class VerySparseCorrector final : public CorrectorStrategy {
 public:
  VerySparseCorrector(const Graph& g, const ResolvedParams& params, std::uint64_t seed)
      : core_(induced_subgraph(g, very_sparse_core(g, params.degree_threshold))),
        keeper_(checked_core_keeper(core_.graph)),
        local_(g.vertex_count(), kAbsent),
        rng_(seed) {
    for (std::size_t i = 0; i < core_.to_original.size(); ++i) local_[core_.to_original[i]] = static_cast<Vertex>(i);
  }
  std::string name() const override { return "very-sparse"; }
  std::unique_ptr<CorrectorStrategy> clone() const override { return std::make_unique<VerySparseCorrector>(*this); }

  std::vector<Vertex> respond(const GameView& view, std::span<const Vertex> pending) override {
    std::vector<Vertex> in_core;
    for (Vertex v : pending)
      if (local_[v] != kAbsent) in_core.push_back(local_[v]);
    std::sort(in_core.begin(), in_core.end());
    std::vector<Vertex> anchor;
    for (Vertex v : keeper_.keep(in_core, rng_)) anchor.push_back(core_.to_original[v]);
    return detail::finalize_response(view, pending, anchor, true, rng_);
  }

 private:
  static constexpr Vertex kAbsent = ~Vertex{0};
  InducedSubgraph core_;
  detail::PeelingKeeper keeper_;
  std::vector<Vertex> local_;
  Rng rng_;
};

class MaximalIsCorrector final : public CorrectorStrategy {
 public:
  explicit MaximalIsCorrector(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "maximal-is"; }
  std::unique_ptr<CorrectorStrategy> clone() const override { return std::make_unique<MaximalIsCorrector>(*this); }
  std::vector<Vertex> respond(const GameView& view, std::span<const Vertex> pending) override {
    return detail::finalize_response(view, pending, {}, true, rng_);
  }

 private:
  Rng rng_;
};

}  // namespace

std::vector<Vertex> very_sparse_core(const Graph& g, std::size_t degree_threshold) {
  std::vector<Vertex> core;
  for (const Component& comp : components(g)) {
    for (Vertex v : comp.vertices)
      if (comp.kind != ComponentClass::Complex || g.degree(v) >= degree_threshold) core.push_back(v);
  }
  std::sort(core.begin(), core.end());
  return core;
}

std::unique_ptr<CorrectorStrategy> tree_corrector(const Graph& g, std::uint64_t seed, bool strict) {
  return std::make_unique<PeelingCorrector>(g, true, seed, strict);
}

std::unique_ptr<CorrectorStrategy> unicyclic_corrector(const Graph& g, std::uint64_t seed, bool strict) {
  return std::make_unique<PeelingCorrector>(g, false, seed, strict);
}

std::unique_ptr<CorrectorStrategy> very_sparse_corrector(const Graph& g, const StrategyParams& params,
                                                         std::uint64_t seed) {
  return std::make_unique<VerySparseCorrector>(g, resolve(params, g), seed);
}

std::unique_ptr<CorrectorStrategy> maximal_is_corrector(std::uint64_t seed) {
  return std::make_unique<MaximalIsCorrector>(seed);
}

}  // namespace paintlab
