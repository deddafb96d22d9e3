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

#ifndef PAINTLAB_STRATEGIES_HPP
#define PAINTLAB_STRATEGIES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paintlab/game.hpp"
#include "paintlab/graph.hpp"
#include "paintlab/indset.hpp"

namespace paintlab {

enum class Regime { Dense, Sparse, VerySparse };
const char* to_string(Regime r) noexcept;
std::optional<Regime> parse_regime(std::string_view text) noexcept;

enum class SetClass { Small, Medium, Large };
const char* to_string(SetClass c) noexcept;

/// Large iff s >= n/(omega ln^2 n), else Small iff s <= n p/(omega ln^2 n),
/// else Medium.
SetClass classify_set(std::size_t s, std::size_t n, double p, double omega);

/// Regime constants. Unset optionals take the documented defaults once the
/// graph is known (see resolve()).
struct StrategyParams {
  Regime regime = Regime::Dense;
  std::optional<double> p;      // default: m / C(n,2)
  std::optional<double> omega;  // Dense: max(1.5, ln ln n); otherwise ln ln n
  double epsilon = 0.1;
  std::optional<double> c;                       // default: max(0.99, n p)
  std::optional<std::size_t> degree_threshold;   // default: ceil(100 c^2)
  std::size_t extraction_attempts = kDefaultExtractionAttempts;
  bool strict = false;        // no maximality extension of kept sets
  bool redraw_empty = false;  // sparse medium sets: redraw an empty group or type
};

struct ResolvedParams {
  Regime regime = Regime::Dense;
  std::size_t n = 0;
  double p = 0.0;
  double omega = 1.0;
  double epsilon = 0.1;
  double c = 0.99;
  std::size_t degree_threshold = 0;
  std::size_t extraction_attempts = kDefaultExtractionAttempts;
  bool strict = false;
  bool redraw_empty = false;
};

/// ParameterError on omega <= 0, epsilon outside (0,1), c < 0.99 or a
/// probability outside (0,1).
ResolvedParams resolve(const StrategyParams& params, const Graph& g);

/// Large-set extraction target: k0 when defined, else
/// ceil(2 ln(np) / ln(1/(1-p))), at least 1.
std::size_t dense_large_target(std::size_t n, double p);
/// ceil(eps (1-eps) ln(np) / (3p)), at least 1.
std::size_t sparse_large_target(std::size_t n, double p, double epsilon);

/// Correctors that attribute each round to a set class expose it here, so
/// the experiment layer can split eraser spend by class.
class ClassifyingCorrector : public CorrectorStrategy {
 public:
  std::optional<SetClass> last_class() const noexcept { return last_class_; }
  std::size_t fallbacks() const noexcept { return fallbacks_; }

 protected:
  std::optional<SetClass> last_class_;
  std::size_t fallbacks_ = 0;
};

std::unique_ptr<ClassifyingCorrector> dense_corrector(const Graph& g, const StrategyParams& params,
                                                      std::uint64_t seed);
std::unique_ptr<ClassifyingCorrector> sparse_corrector(const Graph& g, const StrategyParams& params,
                                                       std::uint64_t seed);
/// Wins at budget 1 on forests. ParameterError if g has a cycle.
std::unique_ptr<CorrectorStrategy> tree_corrector(const Graph& g, std::uint64_t seed = 0,
                                                  bool strict = false);
/// Wins at budget 2 when every component is a tree or unicyclic.
/// ParameterError otherwise.
std::unique_ptr<CorrectorStrategy> unicyclic_corrector(const Graph& g, std::uint64_t seed = 0,
                                                       bool strict = false);
/// H = all tree and unicyclic components of g plus the vertices of degree at
/// least the threshold in the remaining components. StrategyError if H
/// induces a component with more edges than vertices.
std::unique_ptr<CorrectorStrategy> very_sparse_corrector(const Graph& g, const StrategyParams& params,
                                                         std::uint64_t seed);
/// Keeps a random maximal independent subset of every presented set.
std::unique_ptr<CorrectorStrategy> maximal_is_corrector(std::uint64_t seed);

/// Vertices of H for very_sparse_corrector, sorted.
std::vector<Vertex> very_sparse_core(const Graph& g, std::size_t degree_threshold);

using ColourLists = std::vector<std::vector<int>>;

/// Presents, for each colour in increasing order, the remaining vertices
/// whose list holds it; resigns after the last colour.
std::unique_ptr<PainterStrategy> list_adversary_painter(ColourLists lists);
std::unique_ptr<PainterStrategy> full_set_painter();
/// Each remaining vertex independently with probability q, redrawn if empty.
std::unique_ptr<PainterStrategy> random_painter(double q, std::uint64_t seed);
/// An adjacent pair of eraser-less vertices if one exists, otherwise the
/// remaining vertices of minimum eraser count plus their remaining neighbours.
std::unique_ptr<PainterStrategy> low_eraser_painter(std::uint64_t seed);

}  // namespace paintlab

#endif  // PAINTLAB_STRATEGIES_HPP
