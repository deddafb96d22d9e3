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

#ifndef PAINTLAB_GRAPH_HPP
#define PAINTLAB_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paintlab/vertex_set.hpp"

namespace paintlab {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Two storage layouts sit behind one interface. Sparse graphs use sorted
/// CSR adjacency (edge query by binary search). Dense graphs (or any graph
/// with n <= kMatrixMaxSmallN) use a bit matrix, so edge queries are O(1) and
/// neighbourhoods can be OR-ed into a VertexSet a word at a time. Values are
/// safe to share between threads once built.
class Graph {
 public:
  static constexpr std::size_t kMatrixMaxSmallN = 2048;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws ParameterError on self-loops or endpoints >= n. Repeated edges
  /// (in either orientation) collapse to one.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Builds the bit-matrix layout from an upper-triangular fill; used by the
  /// dense G(n,p) sampler. `upper` holds n rows of words_per_row() words and
  /// only bits v > u of row u may be set.
  static Graph from_upper_matrix(std::size_t n, std::vector<std::uint64_t> upper);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  bool uses_matrix() const noexcept { return matrix_; }

  bool adjacent(Vertex u, Vertex v) const noexcept;
  std::size_t degree(Vertex v) const noexcept;
  std::size_t max_degree() const noexcept;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if (matrix_) {
      const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * stride_];
      for (std::size_t i = 0; i < stride_; ++i) {
        std::uint64_t w = row[i];
        while (w) {
          f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
          w &= w - 1;
        }
      }
    } else {
      for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) f(targets_[i]);
    }
  }

  /// Sorted neighbour list.
  std::vector<Vertex> neighbors(Vertex v) const;

  /// out |= N(v). `out` must have universe vertex_count().
  void add_neighbors_to(Vertex v, VertexSet& out) const;

  /// out := out \ N(v).
  void remove_neighbors_from(Vertex v, VertexSet& out) const;

  /// True iff some neighbour of v lies in `set`.
  bool has_neighbor_in(Vertex v, const VertexSet& set) const;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  bool matrix_ = true;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Binomial random graph driven by Rng(seed).
///
/// For p >= kGnpDenseCutoff pairs are visited in lexicographic order (u < v),
/// each consuming one generator output x, and (u,v) is an edge iff
/// (x >> 11) < floor(p * 2^53). Below the cutoff the sampler skips
/// geometrically (Batagelj-Brandes) over pairs (w, v), w < v, v ascending, with
/// skip = floor(log1p(-r) / log1p(-p)) for r = Rng::uniform01(). p = 0 and
/// p = 1 consume no randomness.
inline constexpr double kGnpDenseCutoff = 0.05;
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Throws ParameterError if S contains a vertex >= n.
bool is_independent(const Graph& g, std::span<const Vertex> s);

enum class ComponentClass { Tree, Unicyclic, Complex };

struct Component {
  std::vector<Vertex> vertices;  // sorted
  std::size_t edge_count = 0;
  ComponentClass kind = ComponentClass::Tree;
};

ComponentClass classify_component(std::size_t vertices, std::size_t edges) noexcept;
const char* to_string(ComponentClass c) noexcept;

/// Connected components ordered by smallest vertex.
std::vector<Component> components(const Graph& g);

struct DegreeSplit {
  std::vector<Vertex> low;   // deg < threshold
  std::vector<Vertex> high;  // deg >= threshold
};
DegreeSplit degree_split(const Graph& g, std::size_t threshold);

struct Colouring {
  std::vector<std::uint32_t> colour;  // colour index per vertex
  std::size_t colour_count = 0;
};
/// First-fit colouring along `order`, which must be a permutation of V(g).
Colouring greedy_colouring(const Graph& g, std::span<const Vertex> order);
bool is_proper_colouring(const Graph& g, std::span<const std::uint32_t> colour);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // local id -> original id, ascending
};
/// Subgraph induced by S (duplicates ignored). Local ids follow ascending
/// original ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

}  // namespace paintlab

#endif  // PAINTLAB_GRAPH_HPP
