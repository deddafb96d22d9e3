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

#include "paintlab/families.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "paintlab/errors.hpp"

namespace paintlab::families {
namespace {

Graph build(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

std::string rooted_code(const Graph& g, Vertex v, Vertex parent, const std::vector<char>& blocked) {
  std::vector<std::string> children;
  g.for_each_neighbor(v, [&](Vertex w) {
    if (w != parent && !blocked[w]) children.push_back(rooted_code(g, w, v, blocked));
  });
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

// Vertices left after repeatedly stripping degree-<=1 vertices, plus the
// stripping layers (used for tree centres).
struct Peel {
  std::vector<char> removed;
  std::vector<Vertex> last_layer;
};

Peel peel_leaves(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Peel peel;
  peel.removed.assign(n, 0);
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (!layer.empty()) {
    if (left == layer.size()) {
      peel.last_layer = layer;
      break;
    }
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      peel.removed[v] = 1;
      --left;
    }
    for (Vertex v : layer) {
      g.for_each_neighbor(v, [&](Vertex w) {
        if (!peel.removed[w] && --deg[w] == 1) next.push_back(w);
      });
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return peel;
}

Graph with_leaf(const Graph& g, Vertex at) {
  auto edges = g.edges();
  const auto n = static_cast<Vertex>(g.vertex_count());
  edges.push_back({at, n});
  return build(n + 1, edges);
}

}  // namespace

Graph edgeless(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return build(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
  return build(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return build(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return build(leaves + 1, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.push_back({u, static_cast<Vertex>(a + v)});
  return build(a + b, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(i + 5)});
    e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return build(10, e);
}

Graph by_name(const std::string& name) {
  static const std::regex single(R"(([KPCSE])(\d+))");
  static const std::regex bip(R"(K(\d+),(\d+))");
  std::smatch m;
  if (name == "petersen") return petersen();
  if (std::regex_match(name, m, bip)) {
    return complete_bipartite(std::stoul(m[1]), std::stoul(m[2]));
  }
  if (std::regex_match(name, m, single)) {
    const std::size_t k = std::stoul(m[2]);
    switch (m[1].str()[0]) {
      case 'K': return complete(k);
      case 'P': return path(k);
      case 'C': return cycle(k);
      case 'S': return star(k);
      case 'E': return edgeless(k);
    }
  }
  throw ParameterError("unknown graph family '" + name + "'");
}

std::string tree_code(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  if (n == 0) return "";
  if (tree.edge_count() + 1 != n) throw ParameterError("tree_code: not a tree");
  const Peel peel = peel_leaves(tree);
  const std::vector<char> none(n, 0);
  std::string best;
  for (Vertex c : peel.last_layer) {
    std::string code = rooted_code(tree, c, c, none);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string unicyclic_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() != n || n < 3) throw ParameterError("unicyclic_code: not unicyclic");
  const Peel peel = peel_leaves(g);
  std::vector<char> on_cycle(n, 0);
  Vertex start = 0;
  bool found = false;
  for (Vertex v = 0; v < n; ++v) {
    if (!peel.removed[v]) {
      on_cycle[v] = 1;
      if (!found) start = v;
      found = true;
    }
  }
  if (!found) throw ParameterError("unicyclic_code: no cycle");
  std::vector<Vertex> ring{start};
  Vertex prev = start;
  Vertex cur = start;
  for (;;) {
    Vertex next = cur;
    g.for_each_neighbor(cur, [&](Vertex w) {
      if (on_cycle[w] && w != prev && next == cur) next = w;
    });
    if (next == start) break;
    ring.push_back(next);
    prev = cur;
    cur = next;
  }
  std::vector<std::string> codes;
  for (Vertex c : ring) codes.push_back(rooted_code(g, c, c, on_cycle));
  const std::size_t k = codes.size();
  std::string best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < k; ++r) {
      std::string s;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t idx = dir == 0 ? (r + i) % k : (r + k - i) % k;
        s += codes[idx];
        s += '|';
      }
      if (best.empty() || s < best) best = s;
    }
  }
  return best;
}

std::vector<Graph> all_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        Graph grown = with_leaf(t, v);
        next.try_emplace(tree_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> all_unicyclic(std::size_t n) {
  if (n < 3) return {};
  std::vector<Graph> level{cycle(3)};
  for (std::size_t size = 4; size <= n; ++size) {
    std::map<std::string, Graph> next;
    Graph ring = cycle(size);
    next.try_emplace(unicyclic_code(ring), std::move(ring));
    for (const Graph& u : level) {
      for (Vertex v = 0; v < u.vertex_count(); ++v) {
        Graph grown = with_leaf(u, v);
        next.try_emplace(unicyclic_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace paintlab::families
