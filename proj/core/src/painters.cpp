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
#include <charconv>
#include <limits>

#include "paintlab/errors.hpp"
#include "paintlab/rng.hpp"
#include "paintlab/strategies.hpp"
#include "paintlab/vertex_set.hpp"

namespace paintlab {
namespace {

class ListAdversary final : public PainterStrategy {
 public:
  explicit ListAdversary(ColourLists lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
      if (lists_[v].empty()) throw ParameterError("list of vertex " + std::to_string(v) + " is empty");
      for (int c : lists_[v]) colours_.push_back(c);
    }
    std::sort(colours_.begin(), colours_.end());
    colours_.erase(std::unique(colours_.begin(), colours_.end()), colours_.end());
  }
  std::string name() const override { return "list"; }

  std::optional<std::vector<Vertex>> present(const GameView& view) override {
    if (lists_.size() != view.graph.vertex_count()) {
      throw ParameterError("list assignment covers " + std::to_string(lists_.size()) +
                           " vertices, graph has " + std::to_string(view.graph.vertex_count()));
    }
    while (next_ < colours_.size()) {
      const int colour = colours_[next_++];
      std::vector<Vertex> s;
      view.remaining.for_each([&](Vertex v) {
        if (std::find(lists_[v].begin(), lists_[v].end(), colour) != lists_[v].end()) s.push_back(v);
      });
      if (!s.empty()) return s;
    }
    return std::nullopt;
  }

 private:
  ColourLists lists_;
  std::vector<int> colours_;
  std::size_t next_ = 0;
};

class FullSet final : public PainterStrategy {
 public:
  std::string name() const override { return "full-set"; }
  std::optional<std::vector<Vertex>> present(const GameView& view) override {
    return view.remaining.to_vector();
  }
};

class RandomPainter final : public PainterStrategy {
 public:
  RandomPainter(double q, std::uint64_t seed) : q_(q), rng_(seed) {
    if (!(q > 0.0 && q <= 1.0)) throw ParameterError("random painter needs q in (0,1]");
  }
  std::string name() const override {
    char buf[32];
    const auto end = std::to_chars(buf, buf + sizeof buf, q_).ptr;
    return "random:" + std::string(buf, end);
  }
  std::optional<std::vector<Vertex>> present(const GameView& view) override {
    std::vector<Vertex> s;
    if (view.remaining.empty()) return s;
    while (s.empty()) {
      view.remaining.for_each([&](Vertex v) {
        if (rng_.bernoulli(q_)) s.push_back(v);
      });
    }
    return s;
  }

 private:
  double q_;
  Rng rng_;
};

class LowEraser final : public PainterStrategy {
 public:
  explicit LowEraser(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "low-eraser"; }

  std::optional<std::vector<Vertex>> present(const GameView& view) override {
    const Graph& g = view.graph;
    const std::size_t n = g.vertex_count();
    VertexSet zero(n);
    int least = std::numeric_limits<int>::max();
    view.remaining.for_each([&](Vertex v) {
      least = std::min(least, view.erasers[v]);
      if (view.erasers[v] == 0) zero.insert(v);
    });
    // Uniform choice among adjacent eraser-less pairs by reservoir sampling.
    std::optional<std::pair<Vertex, Vertex>> pair;
    std::uint64_t seen = 0;
    zero.for_each([&](Vertex v) {
      g.for_each_neighbor(v, [&](Vertex u) {
        if (u > v && zero.contains(u) && rng_.below(++seen) == 0) pair = {v, u};
      });
    });
    if (pair) return std::vector<Vertex>{pair->first, pair->second};

    VertexSet s(n);
    std::size_t lowest = 0;
    view.remaining.for_each([&](Vertex v) {
      if (view.erasers[v] == least) {
        s.insert(v);
        ++lowest;
      }
    });
    if (lowest < view.remaining.count()) {
      VertexSet grown = s;
      s.for_each([&](Vertex v) { g.add_neighbors_to(v, grown); });
      grown &= view.remaining;
      s = std::move(grown);
    }
    return s.to_vector();
  }

 private:
  Rng rng_;
};

}  // namespace

std::unique_ptr<PainterStrategy> list_adversary_painter(ColourLists lists) {
  return std::make_unique<ListAdversary>(std::move(lists));
}

std::unique_ptr<PainterStrategy> full_set_painter() { return std::make_unique<FullSet>(); }

std::unique_ptr<PainterStrategy> random_painter(double q, std::uint64_t seed) {
  return std::make_unique<RandomPainter>(q, seed);
}

std::unique_ptr<PainterStrategy> low_eraser_painter(std::uint64_t seed) {
  return std::make_unique<LowEraser>(seed);
}

}  // namespace paintlab
