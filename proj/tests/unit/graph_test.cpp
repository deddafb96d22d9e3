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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "paintlab/errors.hpp"
#include "paintlab/families.hpp"
#include "paintlab/graph.hpp"
#include "paintlab/graph_io.hpp"
#include "paintlab/rng.hpp"

namespace paintlab {
namespace {

std::vector<Vertex> iota(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

TEST(Rng, SameSeedSameStream) {
  Rng a(99), b(99), c(100);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, BelowStaysInRangeAndHitsEveryValue) {
  Rng rng(5);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++seen[x];
  }
  for (int c : seen) EXPECT_NEAR(c, 1000, 150);
}

TEST(Rng, DeriveSeedSeparatesStreams) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t t = 0; t < 1000; ++t) seeds.insert(derive_seed(42, t));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}

TEST(Gnp, ExtremeProbabilities) {
  const Graph empty = gnp(5, 0.0, 17);
  EXPECT_EQ(empty.vertex_count(), 5u);
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(gnp(4, 1.0, 3), families::complete(4));
  EXPECT_THROW(gnp(4, 1.5, 3), ParameterError);
  EXPECT_THROW(gnp(4, -0.1, 3), ParameterError);
}

TEST(Gnp, RegressionFixtureAndBinomialWindow) {
  const Graph g = gnp(1000, 0.5, 42);
  const double expected = 249750.0;
  EXPECT_LT(std::abs(static_cast<double>(g.edge_count()) - expected), 4.0 * std::sqrt(expected * 0.5));
  EXPECT_EQ(g.edge_count(), 250321u);
}

TEST(Gnp, SeedDeterminesGraph) {
  EXPECT_EQ(gnp(300, 0.2, 7), gnp(300, 0.2, 7));
  EXPECT_FALSE(gnp(300, 0.2, 7) == gnp(300, 0.2, 8));
  EXPECT_EQ(gnp(3000, 0.001, 7), gnp(3000, 0.001, 7));
}

TEST(Gnp, EdgeDensityMatchesPOnBothLayouts) {
  for (double p : {0.3, 0.01}) {
    const std::size_t n = 1500;
    double total = 0;
    for (std::uint64_t s = 0; s < 10; ++s) total += static_cast<double>(gnp(n, p, s).edge_count());
    const double pairs = n * (n - 1) / 2.0;
    const double sd = std::sqrt(pairs * p * (1 - p) / 10);
    EXPECT_NEAR(total / 10, pairs * p, 5 * sd) << "p=" << p;
  }
}

TEST(Gnp, AdjacencyIsSymmetricAndLoopFree) {
  for (double p : {0.4, 0.02}) {
    const Graph g = gnp(200, p, 11);
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < 200; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      g.for_each_neighbor(u, [&](Vertex v) { EXPECT_TRUE(g.adjacent(v, u)); });
      degree_sum += g.degree(u);
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(Graph, FromEdgesRejectsLoopsAndRange) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), ParameterError);
  const std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(Graph::from_edges(3, far), ParameterError);
}

TEST(Graph, LayoutsAgree) {
  const Graph sparse = gnp(5000, 0.002, 3);
  EXPECT_FALSE(sparse.uses_matrix());
  const auto edges = sparse.edges();
  const Graph small = gnp(100, 0.3, 3);
  EXPECT_TRUE(small.uses_matrix());
  const Graph rebuilt = Graph::from_edges(100, small.edges());
  EXPECT_EQ(rebuilt, small);
  EXPECT_EQ(Graph::from_edges(5000, edges), sparse);
}

TEST(IsIndependent, Examples) {
  const Graph k3 = families::complete(3);
  const Graph c5 = families::cycle(5);
  EXPECT_TRUE(is_independent(c5, {}));
  const std::vector<Vertex> pair{0, 1};
  EXPECT_FALSE(is_independent(k3, pair));
  const std::vector<Vertex> apart{0, 2};
  EXPECT_TRUE(is_independent(c5, apart));
}

TEST(IsIndependent, LargeSetsUseBitsets) {
  const Graph g = families::edgeless(200);
  EXPECT_TRUE(is_independent(g, iota(200)));
  const Graph p = families::path(200);
  std::vector<Vertex> evens;
  for (Vertex v = 0; v < 200; v += 2) evens.push_back(v);
  EXPECT_TRUE(is_independent(p, evens));
  evens.push_back(1);
  EXPECT_FALSE(is_independent(p, evens));
}

TEST(Components, Classification) {
  const auto p4 = components(families::path(4));
  ASSERT_EQ(p4.size(), 1u);
  EXPECT_EQ(p4[0].kind, ComponentClass::Tree);
  const auto c5 = components(families::cycle(5));
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0].kind, ComponentClass::Unicyclic);
  const std::vector<Edge> bowtie{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}};
  const auto b = components(Graph::from_edges(5, bowtie));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].kind, ComponentClass::Complex);
  EXPECT_EQ(components(families::edgeless(3)).size(), 3u);
}

TEST(DegreeSplit, Examples) {
  const auto star = degree_split(families::star(5), 3);
  EXPECT_EQ(star.low.size(), 5u);
  EXPECT_EQ(star.high, std::vector<Vertex>{0});
  const auto none = degree_split(families::edgeless(4), 1);
  EXPECT_EQ(none.low.size(), 4u);
  EXPECT_TRUE(none.high.empty());
  const auto k4 = degree_split(families::complete(4), 3);
  EXPECT_TRUE(k4.low.empty());
  EXPECT_EQ(k4.high.size(), 4u);
}

TEST(GreedyColouring, Examples) {
  EXPECT_EQ(greedy_colouring(families::complete(4), iota(4)).colour_count, 4u);
  EXPECT_EQ(greedy_colouring(families::edgeless(6), iota(6)).colour_count, 1u);
  const Colouring c5 = greedy_colouring(families::cycle(5), iota(5));
  EXPECT_EQ(c5.colour_count, 3u);
  EXPECT_TRUE(is_proper_colouring(families::cycle(5), c5.colour));
}

TEST(GreedyColouring, ProperOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = gnp(300, 0.1, s);
    auto order = iota(300);
    Rng rng(s);
    rng.shuffle(std::span<Vertex>(order));
    const Colouring c = greedy_colouring(g, order);
    EXPECT_TRUE(is_proper_colouring(g, c.colour));
    EXPECT_LE(c.colour_count, g.max_degree() + 1);
  }
}

TEST(InducedSubgraph, Examples) {
  const std::vector<Vertex> two{0, 1};
  EXPECT_EQ(induced_subgraph(families::complete(4), two).graph, families::complete(2));
  EXPECT_EQ(induced_subgraph(families::cycle(5), {}).graph.vertex_count(), 0u);
  const std::vector<Vertex> three{0, 1, 2};
  const InducedSubgraph p3 = induced_subgraph(families::cycle(5), three);
  EXPECT_EQ(p3.graph, families::path(3));
  EXPECT_EQ(p3.to_original, three);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = gnp(60, 0.2, 9);
  std::istringstream in(to_edge_list(g));
  EXPECT_EQ(read_edge_list(in), g);
  std::istringstream isolated(to_edge_list(families::edgeless(4)));
  EXPECT_EQ(read_edge_list(isolated).vertex_count(), 4u);
}

TEST(EdgeList, RejectsMalformedInput) {
  std::istringstream bad("3 1\n0 7\n");
  EXPECT_THROW(read_edge_list(bad), ParameterError);
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), ParameterError);
}

TEST(Families, NonIsomorphicCountsMatchKnownSequences) {
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(families::all_trees(n).size(), trees[n - 1]) << n;
  const std::vector<std::size_t> unicyclic{1, 2, 5, 13, 33, 89};
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(families::all_unicyclic(n).size(), unicyclic[n - 3]) << n;
}

TEST(Families, EnumeratedGraphsHaveTheRightShape) {
  for (const Graph& t : families::all_trees(8)) {
    ASSERT_EQ(components(t).size(), 1u);
    EXPECT_EQ(components(t)[0].kind, ComponentClass::Tree);
  }
  for (const Graph& u : families::all_unicyclic(7)) {
    ASSERT_EQ(components(u).size(), 1u);
    EXPECT_EQ(components(u)[0].kind, ComponentClass::Unicyclic);
  }
}

TEST(Families, ByName) {
  EXPECT_EQ(families::by_name("K5"), families::complete(5));
  EXPECT_EQ(families::by_name("K2,4"), families::complete_bipartite(2, 4));
  EXPECT_EQ(families::by_name("petersen").edge_count(), 15u);
  EXPECT_THROW(families::by_name("Q3"), ParameterError);
}

}  // namespace
}  // namespace paintlab
