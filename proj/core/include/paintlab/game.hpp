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

#ifndef PAINTLAB_GAME_HPP
#define PAINTLAB_GAME_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paintlab/errors.hpp"
#include "paintlab/graph.hpp"

namespace paintlab {

enum class Side { Painter, Corrector };
const char* to_string(Side side) noexcept;

enum class Outcome { CorrectorWins, PainterWins, PainterForfeit, CorrectorForfeit };
const char* to_string(Outcome outcome) noexcept;
std::optional<Outcome> parse_outcome(std::string_view text) noexcept;

/// True for outcomes in which the Corrector ends up ahead (she wins outright
/// or the Painter forfeits).
inline bool corrector_prevails(Outcome o) noexcept {
  return o == Outcome::CorrectorWins || o == Outcome::PainterForfeit;
}

enum class Phase { AwaitPresent, AwaitRespond, Finished };

/// A move rejected by the referee, attributed to the side that made it.
class IllegalMove : public Error {
 public:
  IllegalMove(Side side, const std::string& what) : Error(what), side_(side) {}
  Side side() const noexcept { return side_; }

 private:
  Side side_;
};

/// Read-only public information handed to strategies. Both players see the
/// whole board.
struct GameView {
  const Graph& graph;
  const VertexSet& remaining;
  std::span<const int> erasers;
  std::size_t round;  // completed rounds so far
};

/// Referee state for one Paint-Correct game.
///
/// Colours are implicit: round r uses colour r and colours never recur.
/// The per-vertex eraser vector is public so exact-solver recursions can start
/// from uneven positions; the uniform-budget constructor is new_game().
class GameState {
 public:
  GameState(const Graph& g, std::vector<int> erasers);
  static GameState new_game(const Graph& g, int budget);

  const Graph& graph() const noexcept { return *graph_; }
  Phase phase() const noexcept { return phase_; }
  std::optional<Outcome> outcome() const noexcept { return outcome_; }
  bool finished() const noexcept { return phase_ == Phase::Finished; }

  const VertexSet& remaining() const noexcept { return remaining_; }
  std::size_t remaining_count() const noexcept { return remaining_count_; }
  std::span<const int> erasers() const noexcept { return erasers_; }
  std::span<const int> initial_erasers() const noexcept { return initial_; }
  std::span<const Vertex> pending() const noexcept { return pending_; }
  std::size_t round() const noexcept { return round_; }

  GameView view() const noexcept { return {*graph_, remaining_, erasers_, round_}; }

  /// Painter move. Duplicates are ignored. Throws IllegalMove(Painter) on an
  /// empty set or a vertex that is not remaining; StateError in the wrong phase.
  void present(std::span<const Vertex> s);

  /// Whether an independent I within the pending set exists such that every
  /// pending vertex outside I still has an eraser, i.e. whether the pending
  /// vertices with no erasers form an independent set.
  bool legal_responses_exist() const;

  /// Corrector move. If no legal response exists the game ends in PainterWins
  /// and `kept` is ignored. Otherwise throws IllegalMove(Corrector) when kept
  /// is not an independent subset of the pending set or would erase a vertex
  /// with no erasers left.
  void respond(std::span<const Vertex> kept);

  void forfeit(Side side);

 private:
  void finish(Outcome outcome) noexcept;

  const Graph* graph_;
  VertexSet remaining_;
  std::size_t remaining_count_;
  std::vector<int> erasers_;
  std::vector<int> initial_;
  std::vector<Vertex> pending_;
  std::size_t round_ = 0;
  Phase phase_ = Phase::AwaitPresent;
  std::optional<Outcome> outcome_;
};

class PainterStrategy {
 public:
  virtual ~PainterStrategy() = default;
  virtual std::string name() const = 0;
  /// Next set to paint, or nullopt to resign.
  virtual std::optional<std::vector<Vertex>> present(const GameView& view) = 0;
};

class CorrectorStrategy {
 public:
  virtual ~CorrectorStrategy() = default;
  virtual std::string name() const = 0;
  /// Vertices that keep the colour; the rest of `pending` spend an eraser.
  virtual std::vector<Vertex> respond(const GameView& view, std::span<const Vertex> pending) = 0;
  /// Independent copy that behaves identically from here on, or nullptr if
  /// the strategy cannot be copied.
  virtual std::unique_ptr<CorrectorStrategy> clone() const { return nullptr; }
};

struct Round {
  std::vector<Vertex> presented;            // sorted
  std::optional<std::vector<Vertex>> kept;  // sorted; empty on the final losing presentation
  std::vector<Vertex> erased() const;
};

struct Transcript {
  std::size_t n = 0;
  std::size_t m = 0;
  int budget = 0;
  std::string painter;
  std::string corrector;
  std::uint64_t painter_seed = 0;
  std::uint64_t corrector_seed = 0;
  std::vector<Round> rounds;
  Outcome outcome = Outcome::CorrectorWins;
  std::string note;  // forfeit reason, empty otherwise
};

struct PlayOptions {
  std::uint64_t painter_seed = 0;
  std::uint64_t corrector_seed = 0;
  /// Called after every accepted response with the updated state and round.
  std::function<void(const GameState&, const Round&)> on_round;
};

/// Runs the game to completion. Illegal moves end the game as a forfeit by
/// the offending side; strategy exceptions are treated the same way.
Transcript play(const Graph& g, int budget, PainterStrategy& painter, CorrectorStrategy& corrector,
                const PlayOptions& options = {});

struct ReplayResult {
  bool consistent = false;
  Outcome outcome = Outcome::CorrectorWins;
  std::vector<int> final_erasers;
  std::string problem;  // first inconsistency, if any
};

/// Feeds the transcript's moves through a fresh referee and checks that every
/// move is accepted and the recorded outcome is reproduced.
ReplayResult replay(const Graph& g, const Transcript& t);

// JSON-lines: a header object, one object per round
// {"round":r,"presented":[...],"kept":[...]} (kept is null on a presentation
// that admits no legal response), and a trailer with the outcome. Vertex
// lists are sorted, so equal games serialise to equal bytes.
std::string to_jsonl(const Transcript& t);
Transcript transcript_from_jsonl(std::string_view text);

}  // namespace paintlab

#endif  // PAINTLAB_GAME_HPP
