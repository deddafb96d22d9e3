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

#ifndef PAINTLAB_THEORY_HPP
#define PAINTLAB_THEORY_HPP

#include <cstddef>
#include <optional>
#include <string>

namespace paintlab {

/// n ln(1/(1-p)) / (2 ln(np)). DomainError unless 0 < p < 1 and np > 1.
double chi_asymptotic(double n, double p);

struct ChainBounds {
  std::size_t lower = 0;  // chi
  double upper = 0.0;     // chi ln n + 1
};
/// ParameterError unless chi >= 1 and n >= 1.
ChainBounds chain_bounds(std::size_t chi, std::size_t n);

/// (1+x) ln(1+x) - x. DomainError for x < 0.
double phi(double x);

/// 2 for C = +infinity, 2C/(C-2) on [4, inf), 4 on (2, 4). DomainError for
/// C <= 2 or NaN.
double constant_factor(double c);

struct RegimeBounds {
  double n = 0.0;
  double p = 0.0;
  double omega = 0.0;
  double b = 0.0;                         // 1/(1-p)
  double chi_asymptotic = 0.0;
  double k0_asymptotic = 0.0;             // 2 log_b(np)
  double eraser_budget_prediction = 0.0;  // n / (2 log_b(np))
  double log_exponent = 0.0;              // C with np = (ln n)^C
  std::optional<double> constant_factor;  // table value at log_exponent, when above 2
  double s0 = 0.0;                        // 10 ln n / p
  double large_threshold = 0.0;           // n / (omega ln^2 n)
  double small_threshold = 0.0;           // n p / (omega ln^2 n)
};

/// DomainError unless 0 < p < 1 and np > 1; ParameterError unless omega > 0.
RegimeBounds regime_bounds(double n, double p, double omega);

/// Pretty-printed JSON object with the fields above.
std::string to_json(const RegimeBounds& bounds);

}  // namespace paintlab

#endif  // PAINTLAB_THEORY_HPP
