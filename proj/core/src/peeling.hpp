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

#ifndef PAINTLAB_SRC_PEELING_HPP
#define PAINTLAB_SRC_PEELING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "paintlab/game.hpp"
#include "paintlab/graph.hpp"
#include "paintlab/rng.hpp"

namespace paintlab::detail {

/// Shared last step of every corrector: keep all eraser-less pending
/// vertices, add the anchor vertices not adjacent to them, and optionally
/// extend to a maximal independent subset of `pending` in random order.
/// Returns a sorted kept set.
std::vector<Vertex> finalize_response(const GameView& view, std::span<const Vertex> pending,
                                      std::span<const Vertex> anchor, bool extend, Rng& rng);

/// Leaf-peeling strategy on a graph whose components are trees or
/// unicyclic. Tree components are rooted at their smallest vertex and a
/// presented vertex is kept iff its parent is not kept in the same round, so
/// each vertex is erased at most once. A cycle is opened the first time one
/// of its vertices is presented: a random presented cycle vertex x is kept,
/// the other presented cycle vertices are erased, and the path C - x is then
/// played as a tree rooted next to x. Hanging trees point toward the cycle.
class PeelingKeeper {
 public:
  /// ParameterError if some component has more edges than vertices, or if
  /// `forest_only` and some component has a cycle.
  PeelingKeeper(const Graph& h, bool forest_only);

  /// Kept subset of `presented` (local ids of h), sorted.
  std::vector<Vertex> keep(std::span<const Vertex> presented, Rng& rng);

 private:
  struct Cycle {
    std::vector<Vertex> ring;  // cyclic order
    bool opened = false;
  };
  static constexpr std::int64_t kRoot = -1;

  void open(Cycle& cycle, Vertex x);

  std::vector<std::int64_t> parent_;
  std::vector<std::uint64_t> rank_;
  std::vector<std::int32_t> cycle_of_;
  std::vector<Cycle> cycles_;
  std::vector<char> kept_;
};

}  // namespace paintlab::detail

#endif  // PAINTLAB_SRC_PEELING_HPP
