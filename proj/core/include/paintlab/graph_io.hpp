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

#ifndef PAINTLAB_GRAPH_IO_HPP
#define PAINTLAB_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "paintlab/graph.hpp"

namespace paintlab {

// Edge-list text format: a first line "n m", then m lines "u v" with u < v in
// lexicographic order, each terminated by '\n'. Output is byte-exact for a
// given graph.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Accepts any edge order and orientation; throws ParameterError on malformed
/// input, a count mismatch, self-loops or out-of-range endpoints.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace paintlab

#endif  // PAINTLAB_GRAPH_IO_HPP
