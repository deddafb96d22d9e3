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

#include "paintlab/theory.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"
#include "paintlab/errors.hpp"

namespace paintlab {
namespace {

void check_regime(double n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie strictly between 0 and 1");
  if (!(n * p > 1.0)) throw DomainError("np must exceed 1");
}

}  // namespace

double chi_asymptotic(double n, double p) {
  check_regime(n, p);
  return n * -std::log1p(-p) / (2.0 * std::log(n * p));
}

ChainBounds chain_bounds(std::size_t chi, std::size_t n) {
  if (chi < 1 || n < 1) throw ParameterError("chain_bounds needs chi >= 1 and n >= 1");
  return {chi, static_cast<double>(chi) * std::log(static_cast<double>(n)) + 1.0};
}

double phi(double x) {
  if (!(x >= 0.0)) throw DomainError("phi is defined for x >= 0");
  return (1.0 + x) * std::log1p(x) - x;
}

double constant_factor(double c) {
  if (std::isnan(c) || c <= 2.0) throw DomainError("constant_factor needs C > 2");
  if (std::isinf(c)) return 2.0;
  if (c >= 4.0) return 2.0 * c / (c - 2.0);
  return 4.0;
}

RegimeBounds regime_bounds(double n, double p, double omega) {
  check_regime(n, p);
  if (!(omega > 0.0)) throw ParameterError("omega must be positive");
  RegimeBounds r;
  r.n = n;
  r.p = p;
  r.omega = omega;
  r.b = 1.0 / (1.0 - p);
  const double ln_b = -std::log1p(-p);
  const double ln_np = std::log(n * p);
  const double ln_n = std::log(n);
  r.chi_asymptotic = chi_asymptotic(n, p);
  r.k0_asymptotic = 2.0 * ln_np / ln_b;
  r.eraser_budget_prediction = n / r.k0_asymptotic;
  r.log_exponent = ln_n > 1.0 ? ln_np / std::log(ln_n) : std::numeric_limits<double>::quiet_NaN();
  if (r.log_exponent > 2.0) r.constant_factor = constant_factor(r.log_exponent);
  r.s0 = 10.0 * ln_n / p;
  r.large_threshold = n / (omega * ln_n * ln_n);
  r.small_threshold = p * r.large_threshold;
  return r;
}

std::string to_json(const RegimeBounds& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["omega"] = r.omega;
  j["b"] = r.b;
  j["chi_asymptotic"] = r.chi_asymptotic;
  j["k0_asymptotic"] = r.k0_asymptotic;
  j["eraser_budget_prediction"] = r.eraser_budget_prediction;
  if (std::isnan(r.log_exponent)) {
    j["log_exponent"] = nullptr;
  } else {
    j["log_exponent"] = r.log_exponent;
  }
  if (r.constant_factor) {
    j["constant_factor"] = *r.constant_factor;
  } else {
    j["constant_factor"] = nullptr;
  }
  j["s0"] = r.s0;
  j["large_threshold"] = r.large_threshold;
  j["small_threshold"] = r.small_threshold;
  j["asymptotic"] = true;
  return j.dump(2);
}

}  // namespace paintlab
