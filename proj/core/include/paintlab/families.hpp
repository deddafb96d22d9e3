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

#ifndef PAINTLAB_FAMILIES_HPP
#define PAINTLAB_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "paintlab/graph.hpp"

namespace paintlab::families {

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
/// Cycle 0-1-...-(n-1)-0; n >= 3.
Graph cycle(std::size_t n);
/// K_{1,leaves} with centre 0.
Graph star(std::size_t leaves);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();

/// Parses names such as "K5", "P4", "C7", "S3" (star), "E6" (edgeless),
/// "K2,4" and "petersen". Throws ParameterError otherwise.
Graph by_name(const std::string& name);

/// Canonical string of a tree (AHU encoding rooted at the centre).
std::string tree_code(const Graph& tree);
/// Canonical string of a connected unicyclic graph: hanging-tree codes around
/// the cycle, minimised over rotations and reflections.
std::string unicyclic_code(const Graph& g);

/// All trees on n vertices up to isomorphism, in code order.
std::vector<Graph> all_trees(std::size_t n);
/// All connected unicyclic graphs on n >= 3 vertices up to isomorphism.
std::vector<Graph> all_unicyclic(std::size_t n);

}  // namespace paintlab::families

#endif  // PAINTLAB_FAMILIES_HPP
