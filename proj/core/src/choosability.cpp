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

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>

#include "paintlab/errors.hpp"
#include "paintlab/solver.hpp"

namespace paintlab {
namespace {

using Mask = std::uint32_t;
using Lists = std::vector<Mask>;  // colour bitmask per vertex of the small graph

class ChoosabilitySearch {
 public:
  ChoosabilitySearch(const Graph& g, int k) : n_(g.vertex_count()), k_(k), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  // Bad lists for the subgraph induced by `mask` (zero outside it), if any.
  std::optional<Lists> bad(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::optional<Lists> result = compute(mask);
    memo_[mask] = result;
    return result;
  }

 private:
  Mask core(Mask mask) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask rest = mask; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (std::popcount(adj_[v] & mask) < k_) {
          mask &= ~(Mask{1} << v);
          changed = true;
        }
      }
    }
    return mask;
  }

  Mask component_of(Mask mask) const {
    Mask comp = mask & (~mask + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask f = frontier; f; f &= f - 1) grow |= adj_[std::countr_zero(f)];
      grow &= mask & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp;
  }

  std::optional<Lists> compute(Mask mask) {
    const Mask c = core(mask);
    if (c == 0) return std::nullopt;
    if (c != mask) return bad(c);
    const Mask first = component_of(mask);
    if (first != mask) {
      if (auto w = bad(first)) return w;
      return bad(mask & ~first);
    }
    for (Mask rest = mask; rest; rest &= rest - 1) {
      if (auto w = bad(mask & ~(rest & (~rest + 1)))) return w;
    }
    return search(mask);
  }

  // Exhaustive search over canonical k-list assignments on a connected
  // graph all of whose proper induced subgraphs are k-choosable. A bad
  // assignment then has every colour of L(v) present in some neighbour's
  // list, which prunes most branches once N[v] is assigned.
  std::optional<Lists> search(Mask mask) {
    order_.clear();
    Mask seen = mask & (~mask + 1);
    order_.push_back(std::countr_zero(seen));
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Mask nb = adj_[order_[i]] & mask & ~seen; nb; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        seen |= Mask{1} << u;
        order_.push_back(u);
      }
    }
    completes_.assign(order_.size(), {});
    Mask assigned = 0;
    for (std::size_t t = 0; t < order_.size(); ++t) {
      assigned |= Mask{1} << order_[t];
      for (std::size_t s = 0; s <= t; ++s) {
        const int v = order_[s];
        const Mask closed = (adj_[v] & mask) | (Mask{1} << v);
        const Mask before = assigned & ~(Mask{1} << order_[t]);
        if ((closed & assigned) == closed && (closed & before) != closed) completes_[t].push_back(v);
      }
    }
    lists_.assign(n_, 0);
    colour_.assign(n_, -1);
    mask_ = mask;
    if (assign(0, 0)) return lists_;
    return std::nullopt;
  }

  bool tight(int v) const {
    Mask offered = 0;
    for (Mask nb = adj_[v] & mask_; nb; nb &= nb - 1) offered |= lists_[std::countr_zero(nb)];
    return (lists_[v] & ~offered) == 0;
  }

  bool assign(std::size_t t, int used) {
    if (t == order_.size()) return !colourable(0);
    const int v = order_[t];
    for (int fresh = 0; fresh <= k_; ++fresh) {
      const int old = k_ - fresh;
      if (old > used) continue;
      const Mask fresh_bits = ((Mask{1} << fresh) - 1) << used;
      // Enumerate `old`-subsets of the colours already in use.
      if (old == 0) {
        if (try_list(t, v, fresh_bits, used + fresh)) return true;
        continue;
      }
      Mask sub = (Mask{1} << old) - 1;
      const Mask limit = Mask{1} << used;
      while (sub < limit) {
        if (try_list(t, v, sub | fresh_bits, used + fresh)) return true;
        const Mask low = sub & (~sub + 1);
        const Mask ripple = sub + low;
        sub = (((ripple ^ sub) >> 2) / low) | ripple;
      }
    }
    lists_[v] = 0;
    return false;
  }

  bool try_list(std::size_t t, int v, Mask list, int used) {
    lists_[v] = list;
    for (int u : completes_[t])
      if (!tight(u)) return false;
    return assign(t + 1, used);
  }

  bool colourable(std::size_t t) {
    if (t == order_.size()) return true;
    const int v = order_[t];
    Mask blocked = 0;
    for (Mask nb = adj_[v] & mask_; nb; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      if (colour_[u] >= 0) blocked |= Mask{1} << colour_[u];
    }
    for (Mask options = lists_[v] & ~blocked; options; options &= options - 1) {
      colour_[v] = std::countr_zero(options);
      if (colourable(t + 1)) {
        colour_[v] = -1;
        return true;
      }
    }
    colour_[v] = -1;
    return false;
  }

  std::size_t n_;
  int k_;
  std::vector<Mask> adj_;
  std::map<Mask, std::optional<Lists>> memo_;
  std::vector<int> order_;
  std::vector<std::vector<int>> completes_;
  Lists lists_;
  std::vector<int> colour_;
  Mask mask_ = 0;
};

void check_caps(const Graph& g, int k, const SolverLimits& limits) {
  if (k < 1) throw ParameterError("list size k must be at least 1");
  if (g.vertex_count() > std::min<std::size_t>(limits.choose_max_vertices, 30)) {
    throw ResourceError("choosability: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(limits.choose_max_vertices));
  }
  if (k > limits.choose_max_k || static_cast<std::size_t>(k) * g.vertex_count() > 31) {
    throw ResourceError("choosability: k = " + std::to_string(k) + " exceeds cap " +
                        std::to_string(limits.choose_max_k));
  }
}

}  // namespace

std::optional<ListAssignment> find_bad_list_assignment(const Graph& g, int k, SolverLimits limits) {
  check_caps(g, k, limits);
  const std::size_t n = g.vertex_count();
  ChoosabilitySearch search(g, k);
  const std::optional<Lists> partial = search.bad(static_cast<Mask>((Mask{1} << n) - 1));
  if (!partial) return std::nullopt;

  // Vertices outside the bad subgraph get private colours; then relabel all
  // colours by first occurrence in vertex order.
  int next_private = 32;
  std::vector<std::vector<int>> raw(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((*partial)[v] == 0) {
      for (int i = 0; i < k; ++i) raw[v].push_back(next_private++);
    } else {
      for (Mask c = (*partial)[v]; c; c &= c - 1) raw[v].push_back(std::countr_zero(c));
    }
  }
  std::map<int, int> relabel;
  ListAssignment lists(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (int c : raw[v]) {
      auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
      lists[v].push_back(it->second);
    }
    std::sort(lists[v].begin(), lists[v].end());
  }
  return lists;
}

bool is_choosable(const Graph& g, int k, SolverLimits limits) {
  return !find_bad_list_assignment(g, k, limits).has_value();
}

int choice_number(const Graph& g, SolverLimits limits) {
  if (g.vertex_count() == 0) return 1;
  check_caps(g, 1, limits);
  for (int k = std::max(1, chromatic_number(g, limits));; ++k) {
    if (is_choosable(g, k, limits)) return k;
  }
}

bool list_colourable(const Graph& g, const ListAssignment& lists) {
  const std::size_t n = g.vertex_count();
  if (lists.size() != n) throw ParameterError("list assignment length must equal n");
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return lists[a].size() < lists[b].size(); });
  std::vector<int> colour(n, 0);
  std::vector<bool> done(n, false);
  auto extend = [&](auto& self, std::size_t t) -> bool {
    if (t == n) return true;
    const Vertex v = order[t];
    for (int c : lists[v]) {
      bool clash = false;
      g.for_each_neighbor(v, [&](Vertex u) { clash = clash || (done[u] && colour[u] == c); });
      if (clash) continue;
      colour[v] = c;
      done[v] = true;
      if (self(self, t + 1)) return true;
      done[v] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace paintlab
