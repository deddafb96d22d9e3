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

#ifndef PAINTLAB_INDSET_HPP
#define PAINTLAB_INDSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paintlab/graph.hpp"

namespace paintlab {

inline constexpr std::size_t kDefaultExtractionAttempts = 50;

/// Largest k in 1..n with C(n,k)(1-p)^C(k,2) >= n^4, evaluated in log space;
/// nullopt when no k qualifies. ParameterError unless 0 < p < 1 and n >= 1.
std::optional<std::size_t> k0(std::size_t n, double p);

/// Left side minus right side of the k0 inequality, in logs:
/// ln C(n,k) + C(k,2) ln(1-p) - 4 ln n.
double k0_margin(std::size_t n, double p, std::size_t k);

/// Maximal independent subset of S built by a seeded random-order scan.
/// Each step adds a uniformly random vertex among those not yet excluded,
/// which has the same law as scanning a uniform random permutation.
std::vector<Vertex> greedy_independent_set(const Graph& g, std::span<const Vertex> s,
                                           std::uint64_t seed);

struct ExtractionReport {
  std::size_t requested = 0;
  std::size_t achieved = 0;
  std::size_t attempts = 0;
  bool fallback = false;  // achieved < requested
};

struct Extraction {
  std::vector<Vertex> set;  // sorted
  ExtractionReport report;
};

/// Up to max_attempts greedy runs with derived seeds; the first run reaching
/// `target` is returned truncated to exactly `target`, otherwise the largest
/// run is returned with the fallback flag set.
Extraction find_independent_of_size(const Graph& g, std::span<const Vertex> s, std::size_t target,
                                    std::size_t max_attempts, std::uint64_t seed);

/// ceil(x) that ignores floating-point noise just above an integer.
std::size_t ceil_size(double x);

/// Part size for type i: ceil(1/(9p)) for i = 0, ceil(i/(9p 2^i)) otherwise.
std::size_t type_part_size(int type, double p);

/// 10 ln(n) / p.
double partition_s0(std::size_t n, double p);

struct Part {
  std::vector<Vertex> vertices;  // sorted
  int type = 0;
};

struct Partition {
  std::vector<Part> parts;
  std::vector<Vertex> leftover;  // J, sorted
  int max_type = 0;              // M
  double s0 = 0.0;
  bool fallback = false;
};

/// Type-0 parts of size ceil(1/(9p)) while at least s0 vertices remain.
Partition medium_partition_dense(const Graph& g, std::span<const Vertex> s, double p,
                                 std::uint64_t seed,
                                 std::size_t attempts = kDefaultExtractionAttempts);

/// Dense phase, then dyadic typed parts while the remainder exceeds
/// n p / (omega ln^2 n). Types never exceed ln n / ln 2; a remainder that
/// would need a larger type goes to J with the fallback flag.
Partition medium_partition_typed(const Graph& g, std::span<const Vertex> s, double p, double omega,
                                 std::uint64_t seed,
                                 std::size_t attempts = kDefaultExtractionAttempts);

/// q_i = (1/i) / H_M for i = 1..M.
std::vector<double> type_weights(int max_type);

struct PartitionCheck {
  bool ok = true;
  std::string problem;
};
/// Cover, disjointness, independence, exact typed sizes and the M bound.
PartitionCheck check_partition(const Graph& g, std::span<const Vertex> s, double p,
                               const Partition& partition);

}  // namespace paintlab

#endif  // PAINTLAB_INDSET_HPP
