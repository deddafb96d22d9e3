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

#include "paintlab/game.hpp"

#include <algorithm>
#include <exception>

namespace paintlab {
namespace {

std::vector<Vertex> sorted_unique(std::span<const Vertex> s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

const char* to_string(Side side) noexcept {
  return side == Side::Painter ? "painter" : "corrector";
}

const char* to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::CorrectorWins: return "corrector-wins";
    case Outcome::PainterWins: return "painter-wins";
    case Outcome::PainterForfeit: return "painter-forfeit";
    case Outcome::CorrectorForfeit: return "corrector-forfeit";
  }
  return "?";
}

std::optional<Outcome> parse_outcome(std::string_view text) noexcept {
  for (Outcome o : {Outcome::CorrectorWins, Outcome::PainterWins, Outcome::PainterForfeit,
                    Outcome::CorrectorForfeit}) {
    if (text == to_string(o)) return o;
  }
  return std::nullopt;
}

GameState::GameState(const Graph& g, std::vector<int> erasers)
    : graph_(&g),
      remaining_(g.vertex_count(), true),
      remaining_count_(g.vertex_count()),
      erasers_(std::move(erasers)) {
  if (erasers_.size() != g.vertex_count()) throw ParameterError("eraser vector length must equal n");
  for (int e : erasers_)
    if (e < 0) throw ParameterError("eraser counts must be non-negative");
  initial_ = erasers_;
  if (remaining_count_ == 0) finish(Outcome::CorrectorWins);
}

GameState GameState::new_game(const Graph& g, int budget) {
  if (budget < 0) throw ParameterError("budget must be non-negative");
  return GameState(g, std::vector<int>(g.vertex_count(), budget));
}

void GameState::finish(Outcome outcome) noexcept {
  phase_ = Phase::Finished;
  outcome_ = outcome;
  pending_.clear();
}

void GameState::present(std::span<const Vertex> s) {
  if (phase_ != Phase::AwaitPresent) throw StateError("present: not awaiting a presentation");
  auto set = sorted_unique(s);
  if (set.empty()) throw IllegalMove(Side::Painter, "presented set is empty");
  for (Vertex v : set) {
    if (v >= graph_->vertex_count() || !remaining_.contains(v)) {
      throw IllegalMove(Side::Painter,
                        "presented vertex " + std::to_string(v) + " is not uncoloured");
    }
  }
  pending_ = std::move(set);
  phase_ = Phase::AwaitRespond;
}

bool GameState::legal_responses_exist() const {
  if (phase_ != Phase::AwaitRespond) throw StateError("legal_responses_exist: nothing pending");
  std::vector<Vertex> exhausted;
  for (Vertex v : pending_)
    if (erasers_[v] == 0) exhausted.push_back(v);
  return is_independent(*graph_, exhausted);
}

void GameState::respond(std::span<const Vertex> kept) {
  if (phase_ != Phase::AwaitRespond) throw StateError("respond: nothing pending");
  if (!legal_responses_exist()) {
    finish(Outcome::PainterWins);
    return;
  }
  const auto keep = sorted_unique(kept);
  if (!std::includes(pending_.begin(), pending_.end(), keep.begin(), keep.end())) {
    throw IllegalMove(Side::Corrector, "kept set is not a subset of the presented set");
  }
  if (!is_independent(*graph_, keep)) {
    throw IllegalMove(Side::Corrector, "kept set is not independent");
  }
  std::vector<Vertex> erased;
  std::set_difference(pending_.begin(), pending_.end(), keep.begin(), keep.end(),
                      std::back_inserter(erased));
  for (Vertex v : erased) {
    if (erasers_[v] == 0) {
      throw IllegalMove(Side::Corrector,
                        "vertex " + std::to_string(v) + " has no eraser left but was not kept");
    }
  }
  for (Vertex v : erased) --erasers_[v];
  for (Vertex v : keep) remaining_.erase(v);
  remaining_count_ -= keep.size();
  pending_.clear();
  ++round_;
  phase_ = Phase::AwaitPresent;
  if (remaining_count_ == 0) finish(Outcome::CorrectorWins);
}

void GameState::forfeit(Side side) {
  if (phase_ == Phase::Finished) throw StateError("forfeit: game already finished");
  finish(side == Side::Painter ? Outcome::PainterForfeit : Outcome::CorrectorForfeit);
}

std::vector<Vertex> Round::erased() const {
  std::vector<Vertex> out;
  if (!kept) return presented;
  std::set_difference(presented.begin(), presented.end(), kept->begin(), kept->end(),
                      std::back_inserter(out));
  return out;
}

Transcript play(const Graph& g, int budget, PainterStrategy& painter, CorrectorStrategy& corrector,
                const PlayOptions& options) {
  GameState state = GameState::new_game(g, budget);
  Transcript t;
  t.n = g.vertex_count();
  t.m = g.edge_count();
  t.budget = budget;
  t.painter = painter.name();
  t.corrector = corrector.name();
  t.painter_seed = options.painter_seed;
  t.corrector_seed = options.corrector_seed;

  while (!state.finished()) {
    std::optional<std::vector<Vertex>> move;
    try {
      move = painter.present(state.view());
    } catch (const std::exception& e) {
      t.note = std::string("painter error: ") + e.what();
      state.forfeit(Side::Painter);
      break;
    }
    if (!move) {
      t.note = "painter resigned";
      state.forfeit(Side::Painter);
      break;
    }
    try {
      state.present(*move);
    } catch (const IllegalMove& e) {
      t.note = e.what();
      state.forfeit(Side::Painter);
      break;
    }
    Round round;
    round.presented.assign(state.pending().begin(), state.pending().end());
    if (!state.legal_responses_exist()) {
      state.respond({});
      t.rounds.push_back(std::move(round));
      break;
    }
    std::vector<Vertex> kept;
    try {
      kept = corrector.respond(state.view(), state.pending());
      state.respond(kept);
    } catch (const std::exception& e) {
      t.note = e.what();
      state.forfeit(Side::Corrector);
      t.rounds.push_back(std::move(round));
      break;
    }
    round.kept = sorted_unique(kept);
    if (options.on_round) options.on_round(state, round);
    t.rounds.push_back(std::move(round));
  }
  t.outcome = *state.outcome();
  return t;
}

ReplayResult replay(const Graph& g, const Transcript& t) {
  ReplayResult result;
  if (t.n != g.vertex_count()) {
    result.problem = "vertex count mismatch";
    return result;
  }
  GameState state = GameState::new_game(g, t.budget);
  try {
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
      const Round& r = t.rounds[i];
      if (state.finished()) {
        result.problem = "moves recorded after the game ended";
        return result;
      }
      state.present(r.presented);
      if (r.kept) {
        if (!state.legal_responses_exist()) {
          result.problem = "response recorded where none was legal";
          return result;
        }
        state.respond(*r.kept);
      } else if (i + 1 != t.rounds.size()) {
        result.problem = "unanswered presentation before the last round";
        return result;
      } else if (t.outcome == Outcome::PainterWins) {
        if (state.legal_responses_exist()) {
          result.problem = "final presentation admits a legal response";
          return result;
        }
        state.respond({});
      } else if (t.outcome == Outcome::CorrectorForfeit) {
        state.forfeit(Side::Corrector);
      } else {
        result.problem = "unanswered presentation without a matching outcome";
        return result;
      }
    }
  } catch (const std::exception& e) {
    result.problem = e.what();
    return result;
  }
  if (!state.finished()) {
    if (t.outcome != Outcome::PainterForfeit) {
      result.problem = "game unfinished at end of transcript";
      return result;
    }
    state.forfeit(Side::Painter);
  }
  result.outcome = *state.outcome();
  result.final_erasers.assign(state.erasers().begin(), state.erasers().end());
  result.consistent = result.outcome == t.outcome;
  if (!result.consistent) result.problem = "outcome differs from the recorded one";
  return result;
}

}  // namespace paintlab
