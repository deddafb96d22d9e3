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

#include <gtest/gtest.h>

#include "paintlab/errors.hpp"
#include "paintlab/families.hpp"
#include "paintlab/game.hpp"
#include "paintlab/registry.hpp"
#include "paintlab/solver.hpp"
#include "paintlab/strategies.hpp"

namespace paintlab {
namespace {

std::vector<Vertex> vs(std::initializer_list<Vertex> l) { return l; }

TEST(GameState, NewGame) {
  const Graph c5 = families::cycle(5);
  const GameState s = GameState::new_game(c5, 2);
  EXPECT_EQ(std::vector<int>(s.erasers().begin(), s.erasers().end()), std::vector<int>(5, 2));
  EXPECT_EQ(s.phase(), Phase::AwaitPresent);
  const Graph empty;
  const GameState e = GameState::new_game(empty, 5);
  EXPECT_TRUE(e.finished());
  EXPECT_EQ(e.outcome(), Outcome::CorrectorWins);
  EXPECT_THROW(GameState::new_game(c5, -1), ParameterError);
}

TEST(GameState, PresentValidation) {
  const Graph k3 = families::complete(3);
  GameState s = GameState::new_game(k3, 2);
  EXPECT_THROW(s.present({}), IllegalMove);
  s.present(vs({0, 1, 2}));
  EXPECT_EQ(std::vector<Vertex>(s.pending().begin(), s.pending().end()), vs({0, 1, 2}));
  EXPECT_THROW(s.present(vs({0})), StateError);
  s.respond(vs({0}));
  EXPECT_THROW(s.present(vs({0})), IllegalMove);
  try {
    s.present(vs({7}));
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_EQ(e.side(), Side::Painter);
  }
}

TEST(GameState, LegalResponsesExist) {
  const Graph k2 = families::complete(2);
  GameState zero = GameState::new_game(k2, 0);
  zero.present(vs({0, 1}));
  EXPECT_FALSE(zero.legal_responses_exist());

  GameState one = GameState::new_game(k2, 1);
  one.present(vs({0, 1}));
  EXPECT_TRUE(one.legal_responses_exist());

  GameState mixed(k2, {0, 1});
  mixed.present(vs({0, 1}));
  EXPECT_TRUE(mixed.legal_responses_exist());
}

TEST(GameState, RespondAccounting) {
  const Graph k2 = families::complete(2);
  GameState s = GameState::new_game(k2, 1);
  s.present(vs({0, 1}));
  EXPECT_THROW(s.respond(vs({0, 1})), IllegalMove);
  s.respond(vs({0}));
  EXPECT_EQ(s.erasers()[1], 0);
  EXPECT_FALSE(s.remaining().contains(0));
  EXPECT_TRUE(s.remaining().contains(1));
  s.present(vs({1}));
  EXPECT_THROW(s.respond({}), IllegalMove);
  s.respond(vs({1}));
  EXPECT_EQ(s.outcome(), Outcome::CorrectorWins);
}

TEST(GameState, CycleWithoutErasersIsLost) {
  const Graph c5 = families::cycle(5);
  GameState s = GameState::new_game(c5, 0);
  s.present(vs({0, 1, 2, 3, 4}));
  EXPECT_FALSE(s.legal_responses_exist());
  s.respond(vs({0, 2}));
  EXPECT_EQ(s.outcome(), Outcome::PainterWins);
}

TEST(GameState, KeptMustBeSubsetOfPresented) {
  const Graph p3 = families::path(3);
  GameState s = GameState::new_game(p3, 1);
  s.present(vs({0}));
  EXPECT_THROW(s.respond(vs({2})), IllegalMove);
}

TEST(GameState, Forfeit) {
  const Graph p3 = families::path(3);
  GameState s = GameState::new_game(p3, 1);
  s.forfeit(Side::Corrector);
  EXPECT_EQ(s.outcome(), Outcome::CorrectorForfeit);
  EXPECT_THROW(s.forfeit(Side::Painter), StateError);
}

TEST(Play, TreeCorrectorWinsOnTrees) {
  for (const Graph& t : families::all_trees(7)) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto c = tree_corrector(t, seed);
      auto p = low_eraser_painter(seed);
      const Transcript tr = play(t, 1, *p, *c);
      EXPECT_EQ(tr.outcome, Outcome::CorrectorWins);
    }
  }
}

TEST(Play, TriangleWithOneEraserIsLost) {
  const Graph k3 = families::complete(3);
  for (const auto& name : corrector_names()) {
    if (name == "tree" || name == "unicyclic") continue;
    auto c = make_corrector(name, k3, {}, 1);
    auto p = optimal_painter(k3, 1);
    EXPECT_EQ(play(k3, 1, *p, *c).outcome, Outcome::PainterWins) << name;
  }
  auto u = unicyclic_corrector(k3, 1);
  auto p = optimal_painter(k3, 1);
  EXPECT_EQ(play(k3, 1, *p, *u).outcome, Outcome::PainterWins);
}

TEST(Play, DeterministicTranscripts) {
  const Graph g = gnp(40, 0.3, 4);
  auto run = [&] {
    auto c = maximal_is_corrector(9);
    auto p = random_painter(0.5, 10);
    return to_jsonl(play(g, 3, *p, *c));
  };
  EXPECT_EQ(run(), run());
}

TEST(Play, ErasersNeverExceedBudgetAndReplayAgrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(60, 0.2, seed);
    auto c = maximal_is_corrector(seed);
    auto p = random_painter(0.3, seed);
    const Transcript t = play(g, 60, *p, *c);
    const ReplayResult r = replay(g, t);
    ASSERT_TRUE(r.consistent) << r.problem;
    EXPECT_EQ(r.outcome, t.outcome);
    for (int e : r.final_erasers) EXPECT_GE(e, 0);
  }
}

TEST(Transcript, JsonlRoundTrip) {
  const Graph g = families::cycle(7);
  auto c = unicyclic_corrector(g, 3);
  auto p = low_eraser_painter(4);
  const Transcript t = play(g, 2, *p, *c);
  const Transcript back = transcript_from_jsonl(to_jsonl(t));
  EXPECT_EQ(to_jsonl(back), to_jsonl(t));
  EXPECT_TRUE(replay(g, back).consistent);
}

TEST(Transcript, ReplayDetectsTampering) {
  const Graph g = families::path(4);
  auto c = tree_corrector(g, 1);
  auto p = full_set_painter();
  Transcript t = play(g, 1, *p, *c);
  ASSERT_FALSE(t.rounds.empty());
  t.rounds[0].kept = vs({0, 1});
  EXPECT_FALSE(replay(g, t).consistent);
}

}  // namespace
}  // namespace paintlab
