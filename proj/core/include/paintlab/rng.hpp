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

#ifndef PAINTLAB_RNG_HPP
#define PAINTLAB_RNG_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace paintlab {

/// SplitMix64 step: advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Derives the seed of sub-stream `stream` from `seed`.
///
/// Streams are addressed by a counter (trial index, strategy slot, ...), so a
/// run is reproducible from its master seed alone and no two consumers share
/// a generator.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// xoshiro256** seeded through SplitMix64.
///
/// Every distribution used by the library (uniform integers, unit doubles,
/// shuffles) is implemented here rather than through <random> distributions,
/// whose output is implementation-defined. The same seed therefore yields the
/// same bits on every platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept { return next(); }
  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept;

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// True with probability p (p is clamped to [0, 1]).
  bool bernoulli(double p) noexcept;

  template <class T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  template <class T>
  const T& pick(std::span<const T> items) noexcept {
    return items[static_cast<std::size_t>(below(items.size()))];
  }

 private:
  std::uint64_t s_[4];
};

}  // namespace paintlab

#endif  // PAINTLAB_RNG_HPP
