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

#include "paintlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "paintlab/errors.hpp"
#include "paintlab/rng.hpp"

namespace paintlab {
namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// In-place transpose of a 64x64 bit block stored LSB-first: bit c of a[r]
// is entry (r, c).
void transpose64(std::uint64_t a[64]) {
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (int k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for graph on " +
                         std::to_string(n) + " vertices");
  }
}

}  // namespace

Graph::Graph(std::size_t n)
    : n_(n), m_(0), matrix_(n <= kMatrixMaxSmallN), stride_(words_for(n)) {
  if (matrix_) {
    bits_.assign(n_ * stride_, 0);
  } else {
    offsets_.assign(n_ + 1, 0);
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    norm.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = n;
  g.m_ = norm.size();
  g.stride_ = words_for(n);
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  g.matrix_ = n <= kMatrixMaxSmallN || 64.0 * static_cast<double>(g.m_) >= nn;
  if (g.matrix_) {
    g.bits_.assign(n * g.stride_, 0);
    for (const Edge& e : norm) {
      g.bits_[e.u * g.stride_ + (e.v >> 6)] |= 1ULL << (e.v & 63);
      g.bits_[e.v * g.stride_ + (e.u >> 6)] |= 1ULL << (e.u & 63);
    }
  } else {
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : norm) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(2 * norm.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted, so each list is filled in ascending order for the
    // u-side; the v-side receives u's in ascending order as well.
    for (const Edge& e : norm) g.targets_[fill[e.v]++] = e.u;
    for (const Edge& e : norm) g.targets_[fill[e.u]++] = e.v;
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
  }
  return g;
}

Graph Graph::from_upper_matrix(std::size_t n, std::vector<std::uint64_t> upper) {
  Graph g;
  g.n_ = n;
  g.stride_ = words_for(n);
  g.matrix_ = true;
  if (upper.size() != n * g.stride_) throw ParameterError("matrix size mismatch");
  g.bits_ = std::move(upper);

  const std::size_t blocks = g.stride_;
  std::uint64_t block[64];
  for (std::size_t bi = 0; bi < blocks; ++bi) {
    for (std::size_t bj = bi; bj < blocks; ++bj) {
      for (std::size_t r = 0; r < 64; ++r) {
        const std::size_t row = bi * 64 + r;
        block[r] = row < n ? g.bits_[row * g.stride_ + bj] : 0;
      }
      transpose64(block);
      for (std::size_t r = 0; r < 64; ++r) {
        const std::size_t row = bj * 64 + r;
        if (row < n) g.bits_[row * g.stride_ + bi] |= block[r];
      }
    }
  }
  std::size_t twice = 0;
  for (auto w : g.bits_) twice += static_cast<std::size_t>(std::popcount(w));
  g.m_ = twice / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (matrix_) return (bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1ULL;
  const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
  const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
  return std::binary_search(first, last, v);
}

std::size_t Graph::degree(Vertex v) const noexcept {
  if (matrix_) {
    std::size_t d = 0;
    const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * stride_];
    for (std::size_t i = 0; i < stride_; ++i) d += static_cast<std::size_t>(std::popcount(row[i]));
    return d;
  }
  return offsets_[v + 1] - offsets_[v];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  return out;
}

void Graph::add_neighbors_to(Vertex v, VertexSet& out) const {
  if (matrix_) {
    auto words = out.words();
    const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * stride_];
    for (std::size_t i = 0; i < stride_; ++i) words[i] |= row[i];
  } else {
    for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) out.insert(targets_[i]);
  }
}

void Graph::remove_neighbors_from(Vertex v, VertexSet& out) const {
  if (matrix_) {
    auto words = out.words();
    const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * stride_];
    for (std::size_t i = 0; i < stride_; ++i) words[i] &= ~row[i];
  } else {
    for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) out.erase(targets_[i]);
  }
}

bool Graph::has_neighbor_in(Vertex v, const VertexSet& set) const {
  if (matrix_) {
    auto words = set.words();
    const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * stride_];
    for (std::size_t i = 0; i < stride_; ++i)
      if (words[i] & row[i]) return true;
    return false;
  }
  for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i)
    if (set.contains(targets_[i])) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.edges() == b.edges();
}

namespace {

// 64 independent Bernoulli(threshold / 2^53) bits. Each lane compares a
// lazily drawn 53-bit uniform with the threshold, most significant bit first.
std::uint64_t bernoulli_word(Rng& rng, std::uint64_t threshold) {
  std::uint64_t undecided = ~0ULL;
  std::uint64_t ones = 0;
  for (int bit = 52; bit >= 0 && undecided; --bit) {
    const std::uint64_t r = rng.next();
    if ((threshold >> bit) & 1ULL) {
      ones |= undecided & ~r;
      undecided &= r;
    } else {
      undecided &= ~r;
    }
  }
  return ones;
}

}  // namespace

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("gnp: p must lie in [0, 1]");
  if (p == 0.0 || n < 2) return Graph(n);
  if (p == 1.0 || p >= kGnpDenseCutoff) {
    const std::size_t stride = words_for(n);
    std::vector<std::uint64_t> upper(n * stride, 0);
    if (p == 1.0) {
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) upper[u * stride + (v >> 6)] |= 1ULL << (v & 63);
    } else {
      Rng rng(seed);
      const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
      for (std::size_t u = 0; u + 1 < n; ++u) {
        std::uint64_t* row = &upper[u * stride];
        const std::size_t first = (u + 1) >> 6;
        for (std::size_t w = first; w < stride; ++w) {
          std::uint64_t bits = bernoulli_word(rng, threshold);
          if (w == first) bits &= ~0ULL << ((u + 1) & 63);
          row[w] = bits;
        }
        if (n % 64 != 0) row[stride - 1] &= (1ULL << (n % 64)) - 1;
      }
    }
    return Graph::from_upper_matrix(n, std::move(upper));
  }

  // Geometric skipping over pairs (w, v), w < v, with v ascending.
  Rng rng(seed);
  std::vector<Edge> edges;
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, edges);
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.vertex_count();
  for (Vertex v : s) check_vertex(n, v);
  if (s.size() < 2) return true;
  if (s.size() <= 32) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g.adjacent(s[i], s[j])) return false;
    return true;
  }
  const VertexSet members = VertexSet::of(n, s);
  for (Vertex v : s)
    if (g.has_neighbor_in(v, members)) return false;
  return true;
}

ComponentClass classify_component(std::size_t vertices, std::size_t edges) noexcept {
  if (edges + 1 == vertices) return ComponentClass::Tree;
  if (edges == vertices) return ComponentClass::Unicyclic;
  return ComponentClass::Complex;
}

const char* to_string(ComponentClass c) noexcept {
  switch (c) {
    case ComponentClass::Tree: return "tree";
    case ComponentClass::Unicyclic: return "unicyclic";
    case ComponentClass::Complex: return "complex";
  }
  return "?";
}

std::vector<Component> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Component> out;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Component comp;
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    std::size_t degree_sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      g.for_each_neighbor(v, [&](Vertex w) {
        ++degree_sum;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      });
    }
    comp.vertices = queue;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.edge_count = degree_sum / 2;
    comp.kind = classify_component(comp.vertices.size(), comp.edge_count);
    out.push_back(std::move(comp));
  }
  return out;
}

DegreeSplit degree_split(const Graph& g, std::size_t threshold) {
  DegreeSplit split;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    (g.degree(v) < threshold ? split.low : split.high).push_back(v);
  }
  return split;
}

Colouring greedy_colouring(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw ParameterError("greedy_colouring: order is not a permutation");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    check_vertex(n, v);
    if (seen[v]) throw ParameterError("greedy_colouring: order is not a permutation");
    seen[v] = 1;
  }
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  Colouring result;
  result.colour.assign(n, kNone);
  std::vector<std::size_t> stamp(n + 1, 0);
  std::size_t tick = 0;
  for (Vertex v : order) {
    ++tick;
    g.for_each_neighbor(v, [&](Vertex w) {
      if (result.colour[w] != kNone) stamp[result.colour[w]] = tick;
    });
    std::uint32_t c = 0;
    while (stamp[c] == tick) ++c;
    result.colour[v] = c;
    result.colour_count = std::max<std::size_t>(result.colour_count, c + 1);
  }
  return result;
}

bool is_proper_colouring(const Graph& g, std::span<const std::uint32_t> colour) {
  if (colour.size() != g.vertex_count()) return false;
  for (const Edge& e : g.edges())
    if (colour[e.u] == colour[e.v]) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.vertex_count();
  InducedSubgraph out;
  out.to_original.assign(s.begin(), s.end());
  for (Vertex v : out.to_original) check_vertex(n, v);
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                        out.to_original.end());
  const std::size_t k = out.to_original.size();
  std::vector<Edge> edges;
  if (k * k <= 4 * n + 64) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (g.adjacent(out.to_original[i], out.to_original[j]))
          edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  } else {
    std::vector<std::int64_t> local(n, -1);
    for (std::size_t i = 0; i < k; ++i) local[out.to_original[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < k; ++i) {
      g.for_each_neighbor(out.to_original[i], [&](Vertex w) {
        const auto j = local[w];
        if (j > static_cast<std::int64_t>(i))
          edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      });
    }
  }
  out.graph = Graph::from_edges(k, edges);
  return out;
}

}  // namespace paintlab
