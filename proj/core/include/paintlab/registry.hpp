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

#ifndef PAINTLAB_REGISTRY_HPP
#define PAINTLAB_REGISTRY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "paintlab/game.hpp"
#include "paintlab/solver.hpp"
#include "paintlab/strategies.hpp"

namespace paintlab {

// Correctors: dense, sparse, very-sparse, tree, unicyclic, maximal-is, optimal.
// Painters: full-set, random:<q>, low-eraser, list:<file>, optimal.
const std::vector<std::string>& corrector_names();
const std::vector<std::string>& painter_names();

/// Syntax check only (a list file is not opened). Never throws.
bool is_known_corrector(std::string_view name) noexcept;
bool is_known_painter(std::string_view name) noexcept;

/// ConfigError on an unknown name; strategy construction errors propagate.
std::unique_ptr<CorrectorStrategy> make_corrector(std::string_view name, const Graph& g,
                                                  const StrategyParams& params, std::uint64_t seed,
                                                  SolverLimits limits = {});
std::unique_ptr<PainterStrategy> make_painter(std::string_view name, const Graph& g, int budget,
                                              std::uint64_t seed, SolverLimits limits = {});

/// Colour lists from JSON: either an array of colour arrays indexed by
/// vertex, or an object mapping vertex ids to colour arrays. ParameterError
/// on malformed input or a vertex without a list.
ColourLists parse_colour_lists(std::string_view json, std::size_t n);
ColourLists read_colour_lists(const std::string& path, std::size_t n);

}  // namespace paintlab

#endif  // PAINTLAB_REGISTRY_HPP
