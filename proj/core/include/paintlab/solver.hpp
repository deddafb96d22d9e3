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

#ifndef PAINTLAB_SOLVER_HPP
#define PAINTLAB_SOLVER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "paintlab/game.hpp"
#include "paintlab/graph.hpp"

namespace paintlab {

/// Size caps for the exact routines. Exceeding a cap raises ResourceError;
/// nothing is ever truncated silently.
struct SolverLimits {
  std::size_t paint_max_vertices = 10;  // hard ceiling kPaintHardCap
  std::size_t chromatic_max_vertices = 20;
  std::size_t choose_max_vertices = 6;
  int choose_max_k = 3;
};

/// Exact Paint-Correct game solver for graphs with at most kPaintHardCap
/// vertices.
///
/// A position is (uncoloured vertex mask, eraser vector). The Painter wins
/// from a position iff some nonempty set S of uncoloured vertices leaves the
/// Corrector no independent I within S (containing every eraser-less vertex
/// of S) whose child position is winnable. Three reductions keep the search
/// small, none of which changes the answer:
///  - only maximal such I are tried (keeping more is never worse);
///  - a vertex with at least as many erasers as uncoloured neighbours is
///    dropped, since it can always be kept later;
///  - components are solved separately.
/// Painter moves are tried by decreasing size, then lexicographically. The
/// memo is keyed by (component mask, erasers on that component).
class PaintabilitySolver {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kPaintHardCap = 12;

  explicit PaintabilitySolver(const Graph& g, SolverLimits limits = {});

  std::size_t vertex_count() const noexcept { return n_; }

  bool paintable(std::span<const int> erasers);
  bool paintable(Mask remaining, std::span<const int> erasers);

  /// A presentation from which the Painter wins, or nullopt if the position
  /// is paintable.
  std::optional<Mask> winning_presentation(Mask remaining, std::span<const int> erasers);

  /// A kept set that leaves a paintable position, or nullopt if every
  /// response loses (or none is legal).
  std::optional<Mask> winning_response(Mask remaining, std::span<const int> erasers, Mask presented);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  using Erasers = std::array<std::uint8_t, kPaintHardCap>;
  struct Entry {
    bool paintable = false;
    Mask witness = 0;  // winning presentation when !paintable
  };

  Mask core(Mask remaining, const Erasers& e) const;
  std::vector<Mask> split(Mask remaining) const;
  bool solve_position(Mask remaining, const Erasers& e);
  Entry solve_component(Mask component, const Erasers& e);
  bool corrector_survives(Mask component, const Erasers& e, Mask s);
  template <class F>
  bool for_each_maximal_independent(Mask candidates, F&& f) const;
  template <class F>
  bool bron_kerbosch(Mask universe, Mask p, Mask x, Mask r, F& f) const;
  std::uint64_t key(Mask component, const Erasers& e) const noexcept;
  Erasers pack(std::span<const int> erasers) const;

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<std::vector<Mask>> order_;  // order_[k]: masks over k bits in search order
  std::unordered_map<std::uint64_t, Entry> memo_;
};

/// Convenience wrappers; each builds a fresh solver.
bool is_paintable(const Graph& g, std::span<const int> erasers, SolverLimits limits = {});
/// Smallest k >= 1 with the Corrector winning on k-1 erasers everywhere. The
/// search starts at the chromatic number.
int paintability(const Graph& g, SolverLimits limits = {});

/// Exact chromatic number by branch and bound (DSatur ordering).
int chromatic_number(const Graph& g, SolverLimits limits = {});

/// Colour lists per vertex, colours are small non-negative integers.
using ListAssignment = std::vector<std::vector<int>>;

/// A k-list assignment admitting no proper colouring from the lists, or
/// nullopt if g is k-choosable. Lists are canonical: colours introduced in
/// order of first use.
std::optional<ListAssignment> find_bad_list_assignment(const Graph& g, int k,
                                                       SolverLimits limits = {});
bool is_choosable(const Graph& g, int k, SolverLimits limits = {});
/// Smallest k with g k-choosable; ResourceError if that exceeds the caps.
int choice_number(const Graph& g, SolverLimits limits = {});
/// Whether some proper colouring picks every vertex's colour from its list.
bool list_colourable(const Graph& g, const ListAssignment& lists);

/// Painter that wins against every Corrector from (g, budget). Throws
/// LogicError if the position is paintable.
std::unique_ptr<PainterStrategy> optimal_painter(const Graph& g, int budget,
                                                 SolverLimits limits = {});
/// Corrector that plays solver-optimal responses; wins whenever the current
/// position is paintable and otherwise keeps a maximal legal set.
std::unique_ptr<CorrectorStrategy> optimal_corrector(const Graph& g, SolverLimits limits = {});

}  // namespace paintlab

#endif  // PAINTLAB_SOLVER_HPP
