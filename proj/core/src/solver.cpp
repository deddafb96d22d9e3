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

#include "paintlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "paintlab/errors.hpp"

namespace paintlab {
namespace {

using Mask = PaintabilitySolver::Mask;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

// Order-preserving embedding of a k-bit mask into the positions of `onto`.
Mask deposit(Mask local, Mask onto) {
  Mask out = 0;
  while (local) {
    const Mask low = onto & (~onto + 1);
    if (local & 1) out |= low;
    onto &= onto - 1;
    local >>= 1;
  }
  return out;
}

// Decreasing size, then lexicographic on the sorted member lists; for equal
// sizes the set owning the lowest element of the symmetric difference comes
// first.
bool search_before(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca > cb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

}  // namespace

PaintabilitySolver::PaintabilitySolver(const Graph& g, SolverLimits limits) : n_(g.vertex_count()) {
  const std::size_t cap = std::min(limits.paint_max_vertices, kPaintHardCap);
  if (n_ > cap) {
    throw ResourceError("paintability solver: " + std::to_string(n_) + " vertices exceeds cap " +
                        std::to_string(cap));
  }
  adj_.assign(n_, 0);
  for (const Edge& e : g.edges()) {
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
  order_.resize(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) {
    auto& masks = order_[k];
    for (Mask m = 1; m < bit(k); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), search_before);
  }
}

PaintabilitySolver::Erasers PaintabilitySolver::pack(std::span<const int> erasers) const {
  if (erasers.size() != n_) throw ParameterError("eraser vector length must equal n");
  Erasers e{};
  for (std::size_t v = 0; v < n_; ++v) {
    if (erasers[v] < 0) throw ParameterError("eraser counts must be non-negative");
    e[v] = static_cast<std::uint8_t>(std::min(erasers[v], 15));
  }
  return e;
}

std::uint64_t PaintabilitySolver::key(Mask component, const Erasers& e) const noexcept {
  std::uint64_t k = component;
  for (Mask rest = component; rest; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    k |= static_cast<std::uint64_t>(e[v]) << (kPaintHardCap + 4 * v);
  }
  return k;
}

PaintabilitySolver::Mask PaintabilitySolver::core(Mask remaining, const Erasers& e) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask rest = remaining; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (e[v] >= std::popcount(adj_[v] & remaining)) {
        remaining &= ~bit(v);
        changed = true;
      }
    }
  }
  return remaining;
}

std::vector<Mask> PaintabilitySolver::split(Mask remaining) const {
  std::vector<Mask> parts;
  while (remaining) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask f = frontier; f; f &= f - 1) grow |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      grow &= remaining & ~comp;
      comp |= grow;
      frontier = grow;
    }
    parts.push_back(comp);
    remaining &= ~comp;
  }
  return parts;
}

template <class F>
bool PaintabilitySolver::bron_kerbosch(Mask universe, Mask p, Mask x, Mask r, F& f) const {
  if (p == 0 && x == 0) return f(r);
  // Pivot on the vertex with the most non-neighbours among the candidates.
  Mask pivot_non = 0;
  int best = -1;
  for (Mask px = p | x; px; px &= px - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(px));
    const Mask non = universe & ~adj_[u] & ~bit(u);
    const int c = std::popcount(non & p);
    if (c > best) {
      best = c;
      pivot_non = non;
    }
  }
  for (Mask cand = p & ~pivot_non; cand; cand &= cand - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    const Mask non = universe & ~adj_[v] & ~bit(v);
    if (bron_kerbosch(universe, p & non, x & non, r | bit(v), f)) return true;
    p &= ~bit(v);
    x |= bit(v);
  }
  return false;
}

template <class F>
bool PaintabilitySolver::for_each_maximal_independent(Mask candidates, F&& f) const {
  if (candidates == 0) return f(Mask{0});
  return bron_kerbosch(candidates, candidates, Mask{0}, Mask{0}, f);
}

bool PaintabilitySolver::corrector_survives(Mask component, const Erasers& e, Mask s) {
  Mask zero = 0;
  for (Mask rest = s; rest; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    if (e[v] == 0) zero |= bit(v);
  }
  Mask blocked = 0;
  for (Mask z = zero; z; z &= z - 1) blocked |= adj_[static_cast<std::size_t>(std::countr_zero(z))];
  if (blocked & zero) return false;
  const Mask avail = s & ~zero & ~blocked;
  return for_each_maximal_independent(avail, [&](Mask extra) {
    const Mask kept = zero | extra;
    Erasers child = e;
    for (Mask rest = s & ~kept; rest; rest &= rest - 1) --child[static_cast<std::size_t>(std::countr_zero(rest))];
    return solve_position(component & ~kept, child);
  });
}

PaintabilitySolver::Entry PaintabilitySolver::solve_component(Mask component, const Erasers& e) {
  const std::uint64_t k = key(component, e);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  Entry entry{true, 0};
  const auto size = static_cast<std::size_t>(std::popcount(component));
  for (Mask local : order_[size]) {
    const Mask s = deposit(local, component);
    if (!corrector_survives(component, e, s)) {
      entry = {false, s};
      break;
    }
  }
  memo_[k] = entry;
  return entry;
}

bool PaintabilitySolver::solve_position(Mask remaining, const Erasers& e) {
  const Mask c = core(remaining, e);
  for (Mask comp : split(c))
    if (!solve_component(comp, e).paintable) return false;
  return true;
}

bool PaintabilitySolver::paintable(std::span<const int> erasers) {
  return paintable(static_cast<Mask>(bit(n_) - 1), erasers);
}

bool PaintabilitySolver::paintable(Mask remaining, std::span<const int> erasers) {
  return solve_position(remaining & static_cast<Mask>(bit(n_) - 1), pack(erasers));
}

std::optional<Mask> PaintabilitySolver::winning_presentation(Mask remaining,
                                                             std::span<const int> erasers) {
  const Erasers e = pack(erasers);
  remaining &= static_cast<Mask>(bit(n_) - 1);
  for (Mask comp : split(core(remaining, e))) {
    const Entry entry = solve_component(comp, e);
    if (!entry.paintable) return entry.witness;
  }
  return std::nullopt;
}

std::optional<Mask> PaintabilitySolver::winning_response(Mask remaining, std::span<const int> erasers,
                                                         Mask presented) {
  const Erasers e = pack(erasers);
  Mask zero = 0;
  for (Mask rest = presented; rest; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    if (e[v] == 0) zero |= bit(v);
  }
  Mask blocked = 0;
  for (Mask z = zero; z; z &= z - 1) blocked |= adj_[static_cast<std::size_t>(std::countr_zero(z))];
  if (blocked & zero) return std::nullopt;
  std::optional<Mask> found;
  for_each_maximal_independent(presented & ~zero & ~blocked, [&](Mask extra) {
    const Mask kept = zero | extra;
    Erasers child = e;
    for (Mask rest = presented & ~kept; rest; rest &= rest - 1) --child[static_cast<std::size_t>(std::countr_zero(rest))];
    if (solve_position(remaining & ~kept, child)) {
      found = kept;
      return true;
    }
    return false;
  });
  return found;
}

bool is_paintable(const Graph& g, std::span<const int> erasers, SolverLimits limits) {
  PaintabilitySolver solver(g, limits);
  return solver.paintable(erasers);
}

int paintability(const Graph& g, SolverLimits limits) {
  if (g.vertex_count() == 0) return 1;
  PaintabilitySolver solver(g, limits);
  int k = std::max(1, chromatic_number(g, limits));
  const auto n = static_cast<int>(g.vertex_count());
  for (; k < n; ++k) {
    const std::vector<int> erasers(g.vertex_count(), k - 1);
    if (solver.paintable(erasers)) return k;
  }
  return n;
}

namespace {

class OptimalPainter final : public PainterStrategy {
 public:
  OptimalPainter(const Graph& g, SolverLimits limits) : solver_(g, limits) {}
  std::string name() const override { return "optimal"; }

  std::optional<std::vector<Vertex>> present(const GameView& view) override {
    Mask remaining = 0;
    view.remaining.for_each([&](Vertex v) { remaining |= bit(v); });
    auto move = solver_.winning_presentation(remaining, view.erasers);
    // Unreachable from a losing start position; presenting everything keeps
    // the game legal regardless.
    const Mask s = move ? *move : remaining;
    std::vector<Vertex> out;
    for (Mask rest = s; rest; rest &= rest - 1) out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    return out;
  }

  PaintabilitySolver& solver() { return solver_; }

 private:
  PaintabilitySolver solver_;
};

class OptimalCorrector final : public CorrectorStrategy {
 public:
  OptimalCorrector(const Graph& g, SolverLimits limits) : solver_(g, limits) {}
  std::unique_ptr<CorrectorStrategy> clone() const override { return std::make_unique<OptimalCorrector>(*this); }
  std::string name() const override { return "optimal"; }

  std::vector<Vertex> respond(const GameView& view, std::span<const Vertex> pending) override {
    Mask remaining = 0;
    view.remaining.for_each([&](Vertex v) { remaining |= bit(v); });
    Mask presented = 0;
    for (Vertex v : pending) presented |= bit(v);
    std::optional<Mask> kept = solver_.winning_response(remaining, view.erasers, presented);
    std::vector<Vertex> out;
    if (kept) {
      for (Mask rest = *kept; rest; rest &= rest - 1) out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
      return out;
    }
    // Lost position: keep the forced vertices and extend greedily.
    std::vector<Vertex> forced;
    for (Vertex v : pending)
      if (view.erasers[v] == 0) forced.push_back(v);
    out = forced;
    for (Vertex v : pending) {
      if (view.erasers[v] == 0) continue;
      bool free = true;
      for (Vertex u : out) free = free && !view.graph.adjacent(u, v);
      if (free) out.push_back(v);
    }
    return out;
  }

 private:
  PaintabilitySolver solver_;
};

}  // namespace

std::unique_ptr<PainterStrategy> optimal_painter(const Graph& g, int budget, SolverLimits limits) {
  auto painter = std::make_unique<OptimalPainter>(g, limits);
  const std::vector<int> erasers(g.vertex_count(), budget);
  if (painter->solver().paintable(erasers)) {
    throw LogicError("optimal_painter: the Corrector wins this position with " +
                     std::to_string(budget) + " erasers per vertex");
  }
  return painter;
}

std::unique_ptr<CorrectorStrategy> optimal_corrector(const Graph& g, SolverLimits limits) {
  return std::make_unique<OptimalCorrector>(g, limits);
}

// ---------------------------------------------------------------------------
// Chromatic number

namespace {

class ColouringSearch {
 public:
  explicit ColouringSearch(const Graph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1ULL << e.v;
      adj_[e.v] |= 1ULL << e.u;
    }
  }

  bool colourable(int k) {
    k_ = k;
    colour_.assign(n_, -1);
    return extend(0, 0);
  }

  // DSatur first-fit colour count, an upper bound.
  int dsatur_bound() {
    colour_.assign(n_, -1);
    int used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t v = pick();
      std::uint64_t taken = neighbour_colours(v);
      int c = 0;
      while (taken >> c & 1ULL) ++c;
      colour_[v] = c;
      used = std::max(used, c + 1);
    }
    return used;
  }

  // Size of a greedily grown clique, a lower bound.
  int clique_bound() const {
    int best = 0;
    for (std::size_t s = 0; s < n_; ++s) {
      std::uint64_t cand = adj_[s];
      int size = 1;
      while (cand) {
        std::size_t pick_v = 0;
        int deg = -1;
        for (std::uint64_t c = cand; c; c &= c - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(c));
          const int d = std::popcount(adj_[v] & cand);
          if (d > deg) {
            deg = d;
            pick_v = v;
          }
        }
        ++size;
        cand &= adj_[pick_v];
      }
      best = std::max(best, size);
    }
    return best;
  }

 private:
  std::uint64_t neighbour_colours(std::size_t v) const {
    std::uint64_t taken = 0;
    for (std::uint64_t a = adj_[v]; a; a &= a - 1) {
      const int c = colour_[static_cast<std::size_t>(std::countr_zero(a))];
      if (c >= 0) taken |= 1ULL << c;
    }
    return taken;
  }

  std::size_t pick() const {
    std::size_t best = n_;
    int best_sat = -1;
    int best_deg = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = std::popcount(neighbour_colours(v));
      const int deg = std::popcount(adj_[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool extend(std::size_t coloured, int used) {
    if (coloured == n_) return true;
    const std::size_t v = pick();
    const std::uint64_t taken = neighbour_colours(v);
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (taken >> c & 1ULL) continue;
      colour_[v] = c;
      if (extend(coloured + 1, std::max(used, c + 1))) return true;
    }
    colour_[v] = -1;
    return false;
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> colour_;
  int k_ = 0;
};

}  // namespace

int chromatic_number(const Graph& g, SolverLimits limits) {
  const std::size_t n = g.vertex_count();
  const std::size_t cap = std::min<std::size_t>(limits.chromatic_max_vertices, 64);
  if (n > cap) {
    throw ResourceError("chromatic_number: " + std::to_string(n) + " vertices exceeds cap " +
                        std::to_string(cap));
  }
  if (n == 0) return 0;
  ColouringSearch search(g);
  const int upper = search.dsatur_bound();
  for (int k = search.clique_bound(); k < upper; ++k)
    if (search.colourable(k)) return k;
  return upper;
}

}  // namespace paintlab
