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

#include "paintlab/strategies.hpp"

#include <algorithm>
#include <cmath>

#include "paintlab/errors.hpp"
#include "paintlab/rng.hpp"
#include "peeling.hpp"

namespace paintlab {

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Dense: return "dense";
    case Regime::Sparse: return "sparse";
    case Regime::VerySparse: return "very-sparse";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view text) noexcept {
  for (Regime r : {Regime::Dense, Regime::Sparse, Regime::VerySparse})
    if (text == to_string(r)) return r;
  return std::nullopt;
}

const char* to_string(SetClass c) noexcept {
  switch (c) {
    case SetClass::Small: return "small";
    case SetClass::Medium: return "medium";
    case SetClass::Large: return "large";
  }
  return "?";
}

SetClass classify_set(std::size_t s, std::size_t n, double p, double omega) {
  if (s == 0) throw ParameterError("classify_set: s must be at least 1");
  if (!(omega > 0.0)) throw ParameterError("classify_set: omega must be positive");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("classify_set: p must lie in (0,1)");
  const double ln_n = std::log(static_cast<double>(n));
  const double scale = omega * ln_n * ln_n;
  const double size = static_cast<double>(s);
  if (size >= static_cast<double>(n) / scale) return SetClass::Large;
  if (size <= static_cast<double>(n) * p / scale) return SetClass::Small;
  return SetClass::Medium;
}

ResolvedParams resolve(const StrategyParams& params, const Graph& g) {
  ResolvedParams r;
  r.regime = params.regime;
  r.n = g.vertex_count();
  const double n = static_cast<double>(r.n);
  if (params.p) {
    if (!(*params.p > 0.0 && *params.p < 1.0)) throw ParameterError("strategy p must lie in (0,1)");
    r.p = *params.p;
  } else {
    const double pairs = n * (n - 1.0) / 2.0;
    const double estimate = pairs > 0.0 ? static_cast<double>(g.edge_count()) / pairs : 0.0;
    r.p = std::clamp(estimate, 1e-12, 1.0 - 1e-12);
  }
  if (params.omega) {
    if (!(*params.omega > 0.0)) throw ParameterError("omega must be positive");
    r.omega = *params.omega;
  } else {
    const double lnln = n > 1.0 ? std::log(std::log(n)) : 0.0;
    r.omega = params.regime == Regime::Dense ? std::max(1.5, lnln) : (lnln > 0.0 ? lnln : 1.0);
  }
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) throw ParameterError("epsilon must lie in (0,1)");
  r.epsilon = params.epsilon;
  if (params.c) {
    if (!(*params.c >= 0.99)) throw ParameterError("c must be at least 0.99");
    r.c = *params.c;
  } else {
    r.c = std::max(0.99, n * r.p);
  }
  r.degree_threshold = params.degree_threshold ? *params.degree_threshold : ceil_size(100.0 * r.c * r.c);
  if (params.extraction_attempts == 0) throw ParameterError("extraction_attempts must be at least 1");
  r.extraction_attempts = params.extraction_attempts;
  r.strict = params.strict;
  r.redraw_empty = params.redraw_empty;
  return r;
}

std::size_t dense_large_target(std::size_t n, double p) {
  if (n >= 1) {
    if (auto k = k0(n, p)) return *k;
  }
  const double np = static_cast<double>(n) * p;
  const double value = 2.0 * std::log(np) / -std::log1p(-p);
  return std::max<std::size_t>(1, value > 0.0 ? ceil_size(value) : 1);
}

std::size_t sparse_large_target(std::size_t n, double p, double epsilon) {
  const double np = static_cast<double>(n) * p;
  const double value = epsilon * (1.0 - epsilon) * std::log(np) / (3.0 * p);
  return std::max<std::size_t>(1, value > 0.0 ? ceil_size(value) : 1);
}

namespace {

template <class T>
const T& uniform(const std::vector<T>& items, Rng& rng) {
  return items[static_cast<std::size_t>(rng.below(items.size()))];
}

class RegimeCorrector : public ClassifyingCorrector {
 public:
  RegimeCorrector(const Graph& g, const StrategyParams& params, std::uint64_t seed)
      : params_(resolve(params, g)), rng_(seed) {}

  std::vector<Vertex> respond(const GameView& view, std::span<const Vertex> pending) override {
    const SetClass cls = classify_set(pending.size(), params_.n, params_.p, params_.omega);
    last_class_ = cls;
    std::vector<Vertex> anchor;
    switch (cls) {
      case SetClass::Small:
        anchor.push_back(pending[rng_.below(pending.size())]);
        break;
      case SetClass::Large: {
        Extraction x = find_independent_of_size(view.graph, pending, large_target_, params_.extraction_attempts,
                                                rng_.next());
        if (x.report.fallback) ++fallbacks_;
        anchor = std::move(x.set);
        break;
      }
      case SetClass::Medium:
        anchor = medium_anchor(view.graph, pending);
        break;
    }
    return detail::finalize_response(view, pending, anchor, !params_.strict, rng_);
  }

 protected:
  virtual std::vector<Vertex> medium_anchor(const Graph& g, std::span<const Vertex> pending) = 0;

  ResolvedParams params_;
  Rng rng_;
  std::size_t large_target_ = 1;
};

class DenseCorrector final : public RegimeCorrector {
 public:
  DenseCorrector(const Graph& g, const StrategyParams& params, std::uint64_t seed)
      : RegimeCorrector(g, params, seed) {
    large_target_ = dense_large_target(params_.n, params_.p);
  }
  std::string name() const override { return "dense"; }
  std::unique_ptr<CorrectorStrategy> clone() const override { return std::make_unique<DenseCorrector>(*this); }

 private:
  std::vector<Vertex> medium_anchor(const Graph& g, std::span<const Vertex> pending) override {
    const Partition part =
        medium_partition_dense(g, pending, params_.p, rng_.next(), params_.extraction_attempts);
    if (part.fallback) ++fallbacks_;
    if (rng_.below(2) == 0) {
      if (!part.parts.empty()) return uniform(part.parts, rng_).vertices;
    } else if (!part.leftover.empty()) {
      return {uniform(part.leftover, rng_)};
    }
    return {};
  }
};

class SparseCorrector final : public RegimeCorrector {
 public:
  SparseCorrector(const Graph& g, const StrategyParams& params, std::uint64_t seed)
      : RegimeCorrector(g, params, seed) {
    large_target_ = sparse_large_target(params_.n, params_.p, params_.epsilon);
  }
  std::string name() const override { return "sparse"; }
  std::unique_ptr<CorrectorStrategy> clone() const override { return std::make_unique<SparseCorrector>(*this); }

 private:
  std::vector<Vertex> medium_anchor(const Graph& g, std::span<const Vertex> pending) override {
    const Partition part = medium_partition_typed(g, pending, params_.p, params_.omega, rng_.next(),
                                                  params_.extraction_attempts);
    if (part.fallback) ++fallbacks_;
    std::vector<std::vector<const Part*>> by_type(static_cast<std::size_t>(part.max_type) + 1);
    for (const Part& q : part.parts) by_type[static_cast<std::size_t>(q.type)].push_back(&q);
    const std::vector<double> weights =
        part.max_type >= 1 ? type_weights(part.max_type) : std::vector<double>{};
    // With redrawing on, at most this many draws are made before giving up;
    // some group is nonempty because the pending set is.
    const int draws = params_.redraw_empty ? 256 : 1;
    for (int d = 0; d < draws; ++d) {
      const auto group = rng_.below(3);
      if (group == 0) {
        if (!by_type[0].empty()) return uniform(by_type[0], rng_)->vertices;
      } else if (group == 1) {
        if (!weights.empty()) {
          const double u = rng_.uniform01();
          double acc = 0.0;
          std::size_t type = weights.size();
          for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) {
              type = i + 1;
              break;
            }
          }
          if (type > weights.size()) type = weights.size();
          if (!by_type[type].empty()) return uniform(by_type[type], rng_)->vertices;
        }
      } else if (!part.leftover.empty()) {
        return {uniform(part.leftover, rng_)};
      }
    }
    return {};
  }
};

}  // namespace

std::unique_ptr<ClassifyingCorrector> dense_corrector(const Graph& g, const StrategyParams& params,
                                                      std::uint64_t seed) {
  return std::make_unique<DenseCorrector>(g, params, seed);
}

std::unique_ptr<ClassifyingCorrector> sparse_corrector(const Graph& g, const StrategyParams& params,
                                                       std::uint64_t seed) {
  return std::make_unique<SparseCorrector>(g, params, seed);
}

}  // namespace paintlab
