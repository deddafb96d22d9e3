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

#include "paintlab/registry.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "paintlab/errors.hpp"

namespace paintlab {
namespace {

constexpr std::string_view kRandomPrefix = "random:";
constexpr std::string_view kListPrefix = "list:";

std::optional<double> random_q(std::string_view name) {
  if (!name.starts_with(kRandomPrefix)) return std::nullopt;
  const std::string_view text = name.substr(kRandomPrefix.size());
  double q = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  if (!(q > 0.0 && q <= 1.0)) return std::nullopt;
  return q;
}

}  // namespace

const std::vector<std::string>& corrector_names() {
  static const std::vector<std::string> names{"dense",     "sparse",     "very-sparse", "tree",
                                              "unicyclic", "maximal-is", "optimal"};
  return names;
}

const std::vector<std::string>& painter_names() {
  static const std::vector<std::string> names{"full-set", "random:<q>", "low-eraser", "list:<file>",
                                              "optimal"};
  return names;
}

bool is_known_corrector(std::string_view name) noexcept {
  for (const auto& known : corrector_names())
    if (name == known) return true;
  return false;
}

bool is_known_painter(std::string_view name) noexcept {
  if (name == "full-set" || name == "low-eraser" || name == "optimal") return true;
  if (name.starts_with(kListPrefix)) return name.size() > kListPrefix.size();
  return random_q(name).has_value();
}

std::unique_ptr<CorrectorStrategy> make_corrector(std::string_view name, const Graph& g,
                                                  const StrategyParams& params, std::uint64_t seed,
                                                  SolverLimits limits) {
  if (name == "dense") return dense_corrector(g, params, seed);
  if (name == "sparse") return sparse_corrector(g, params, seed);
  if (name == "very-sparse") return very_sparse_corrector(g, params, seed);
  if (name == "tree") return tree_corrector(g, seed, params.strict);
  if (name == "unicyclic") return unicyclic_corrector(g, seed, params.strict);
  if (name == "maximal-is") return maximal_is_corrector(seed);
  if (name == "optimal") return optimal_corrector(g, limits);
  throw ConfigError("unknown corrector '" + std::string(name) + "'");
}

std::unique_ptr<PainterStrategy> make_painter(std::string_view name, const Graph& g, int budget,
                                              std::uint64_t seed, SolverLimits limits) {
  if (name == "full-set") return full_set_painter();
  if (name == "low-eraser") return low_eraser_painter(seed);
  if (name == "optimal") return optimal_painter(g, budget, limits);
  if (name.starts_with(kListPrefix) && name.size() > kListPrefix.size()) {
    return list_adversary_painter(read_colour_lists(std::string(name.substr(kListPrefix.size())), g.vertex_count()));
  }
  if (auto q = random_q(name)) return random_painter(*q, seed);
  throw ConfigError("unknown painter '" + std::string(name) + "'");
}

ColourLists parse_colour_lists(std::string_view json, std::size_t n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("colour lists: ") + e.what());
  }
  ColourLists lists(n);
  std::vector<bool> given(n, false);
  auto assign = [&](std::size_t v, const nlohmann::json& colours) {
    if (v >= n) throw ParameterError("colour lists: vertex " + std::to_string(v) + " out of range");
    if (!colours.is_array()) throw ParameterError("colour lists: entry for vertex " + std::to_string(v) + " is not an array");
    for (const auto& c : colours) {
      if (!c.is_number_integer()) throw ParameterError("colour lists: colours must be integers");
      lists[v].push_back(c.get<int>());
    }
    given[v] = true;
  };
  if (doc.is_array()) {
    for (std::size_t v = 0; v < doc.size(); ++v) assign(v, doc[v]);
  } else if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      std::size_t v = 0;
      const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
      if (ec != std::errc() || end != key.data() + key.size()) {
        throw ParameterError("colour lists: key '" + key + "' is not a vertex id");
      }
      assign(v, value);
    }
  } else {
    throw ParameterError("colour lists: expected an array or an object");
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!given[v] || lists[v].empty()) throw ParameterError("colour lists: vertex " + std::to_string(v) + " has no list");
  return lists;
}

ColourLists read_colour_lists(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open colour list file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_colour_lists(text.str(), n);
}

}  // namespace paintlab
