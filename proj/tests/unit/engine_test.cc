// Copyright 2026 The Procarcade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "procarcade/env.h"
#include "procarcade/error.h"
#include "procarcade/hash.h"
#include "procarcade/params.h"
#include "test_util.h"

namespace procarcade {
namespace {

using testing::GoldenPath;
using testing::SolutionFor;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kDomain;
}

TEST(DecodeAction, MatchesGoldenTable) {
  std::ifstream in(GoldenPath("action_table.txt"));
  ASSERT_TRUE(in) << "missing golden action table";
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int a, dx, dy, special;
    ASSERT_TRUE(fields >> a >> dx >> dy >> special) << line;
    const Intent got = DecodeAction(a);
    EXPECT_EQ(got.dx, dx) << "action " << a;
    EXPECT_EQ(got.dy, dy) << "action " << a;
    EXPECT_EQ(got.special, special) << "action " << a;
    ++rows;
  }
  EXPECT_EQ(rows, kNumActions);
}

TEST(DecodeAction, NamedEntries) {
  EXPECT_EQ(DecodeAction(kNoopAction), Intent{});
  EXPECT_EQ(DecodeAction(7), (Intent{1, 0, 0}));
  EXPECT_EQ(DecodeAction(9).special, 1);
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) EXPECT_EQ(DecodeAction(EncodeMove(dx, dy)), (Intent{int8_t(dx), int8_t(dy), 0}));
  }
}

TEST(DecodeAction, OutOfRangeIsDomainError) {
  EXPECT_EQ(KindOf([] { DecodeAction(-1); }), ErrorKind::kDomain);
  EXPECT_EQ(KindOf([] { DecodeAction(15); }), ErrorKind::kDomain);
}

TEST(SelectLevelSeed, SingletonWindow) {
  EnvConfig c;
  c.num_levels = 1;
  c.start_level = 42;
  RngStream rng = EpisodeStream(0, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(SelectLevelSeed(c, rng, 0), 42u);
}

TEST(SelectLevelSeed, UnboundedStaysBelowTwoToThe31) {
  EnvConfig c;
  RngStream rng = EpisodeStream(3, 0);
  std::set<uint32_t> seen;
  for (int i = 0; i < 10000; ++i) {
    const uint32_t s = SelectLevelSeed(c, rng, 0);
    EXPECT_LT(s, 1u << 31);
    seen.insert(s);
  }
  EXPECT_GT(seen.size(), 9990u);
}

TEST(SelectLevelSeed, SequentialFollowsCompletions) {
  EnvConfig c;
  c.mode = Mode::kSequential;
  c.start_level = 100;
  RngStream rng = EpisodeStream(0, 0);
  const RngStream before = rng;
  EXPECT_EQ(SelectLevelSeed(c, rng, 3), 103u);
  EXPECT_EQ(rng, before);
}

TEST(Config, ModeConstraints) {
  EnvConfig c;
  c.game = GameId::kBigFish;
  c.mode = Mode::kMemory;
  EXPECT_EQ(KindOf([&] { Env env(c); }), ErrorKind::kConfig);
  c.mode = Mode::kExploration;
  EXPECT_EQ(KindOf([&] { Env env(c); }), ErrorKind::kConfig);
  c.game = GameId::kMaze;
  c.num_levels = 500;
  const EnvConfig n = NormalizeConfig(c);
  EXPECT_EQ(n.num_levels, 1u);
  EXPECT_EQ(n.difficulty, Difficulty::kHard);
  EXPECT_EQ(n.start_level, n.params->tables(Difficulty::kHard).maze.common.exploration_seed);
  c.mode = Mode::kStandard;
  c.max_episode_steps = 0;
  EXPECT_EQ(KindOf([&] { Env env(c); }), ErrorKind::kConfig);
}

TEST(Config, DeclaredModeSupport) {
  const std::set<GameId> memory = {GameId::kMaze, GameId::kHeist, GameId::kMiner,
                                   GameId::kCaveFlyer, GameId::kCoinRun};
  const std::set<GameId> exploration = {GameId::kCoinRun, GameId::kCaveFlyer, GameId::kLeaper,
                                        GameId::kMaze, GameId::kHeist, GameId::kNinja};
  for (GameId g : kAllGames) {
    EXPECT_EQ(SupportsMemoryMode(g), memory.contains(g)) << GameName(g);
    EXPECT_EQ(SupportsExplorationMode(g), exploration.contains(g)) << GameName(g);
  }
}

TEST(Env, ResetIsDeterministic) {
  for (GameId g : kAllGames) {
    EnvConfig c;
    c.game = g;
    c.rand_seed = 9;
    Env a(c), b(c);
    EXPECT_EQ(a.Reset(), b.Reset()) << GameName(g);
    EXPECT_EQ(StateHash(a.state()), StateHash(b.state()));
  }
}

TEST(Env, StepAfterDoneIsUsageError) {
  EnvConfig c;
  c.game = GameId::kMaze;
  c.max_episode_steps = 1;
  Env env(c);
  env.Reset();
  EXPECT_TRUE(env.Step(kNoopAction).first.done);
  EXPECT_EQ(KindOf([&] { env.Step(kNoopAction); }), ErrorKind::kUsage);
}

TEST(Env, BadActionIsDomainErrorAndLeavesStateAlone) {
  EnvConfig c;
  c.game = GameId::kCoinRun;
  Env env(c);
  env.Reset();
  const uint64_t before = StateHash(env.state());
  EXPECT_EQ(KindOf([&] { env.Step(15); }), ErrorKind::kDomain);
  EXPECT_EQ(StateHash(env.state()), before);
}

TEST(Env, TimeoutEndsWithZeroReward) {
  for (GameId g : kAllGames) {
    EnvConfig c;
    c.game = g;
    c.max_episode_steps = 3;
    Env env(c);
    env.Reset();
    StepResult last;
    int steps = 0;
    for (; steps < 3; ++steps) {
      last = env.Step(kNoopAction).first;
      if (last.done) break;
    }
    if (last.info.reason != DoneReason::kTimeout) continue;  // died first
    EXPECT_EQ(steps, 2) << GameName(g);
    EXPECT_EQ(last.reward, 0) << GameName(g);
    EXPECT_FALSE(last.info.level_complete);
    EXPECT_LE(env.state().step_count, c.max_episode_steps);
  }
}

TEST(Env, MazeCheeseGivesTenAndEnds) {
  EnvConfig c;
  c.game = GameId::kMaze;
  c.rand_seed = 4;
  Env env(c);
  env.Reset();
  const std::vector<int> plan = SolutionFor(env.state());
  ASSERT_FALSE(plan.empty());
  for (size_t i = 0; i < plan.size(); ++i) {
    const StepResult r = env.Step(plan[i]).first;
    if (i + 1 < plan.size()) {
      ASSERT_FALSE(r.done);
      ASSERT_EQ(r.reward, 0);
    } else {
      EXPECT_TRUE(r.done);
      EXPECT_EQ(r.reward, 10.0);
      EXPECT_TRUE(r.info.level_complete);
      EXPECT_EQ(r.info.reason, DoneReason::kTerminal);
      EXPECT_EQ(r.info.episode_return, 10.0);
    }
  }
}

TEST(Env, MazeIgnoresSpecialButtons) {
  EnvConfig c;
  c.game = GameId::kMaze;
  Env a(c), b(c);
  a.Reset();
  b.Reset();
  for (int special = 9; special < kNumActions; ++special) {
    a.Step(special);
    b.Step(kNoopAction);
    // Only step counters differ between the two; the hash covers them equally.
    EXPECT_EQ(StateHash(a.state()), StateHash(b.state()));
  }
}

TEST(Env, SequentialCoinRunContinuesAfterCoin) {
  EnvConfig c;
  c.game = GameId::kCoinRun;
  c.mode = Mode::kSequential;
  c.start_level = 7;
  Env env(c);
  env.Reset();
  ASSERT_EQ(env.state().level_seed, 7u);
  const std::vector<int> plan = SolutionFor(env.state());
  ASSERT_FALSE(plan.empty());
  StepResult r;
  for (int a : plan) r = env.Step(a).first;
  EXPECT_EQ(r.reward, 10.0);
  EXPECT_FALSE(r.done);
  EXPECT_TRUE(r.info.level_complete);
  EXPECT_EQ(r.info.levels_completed, 1);
  EXPECT_EQ(env.state().level_seed, 8u);
  EXPECT_EQ(env.state().level_step, 0);
  EXPECT_EQ(env.state().episode_return, 10.0);
}

TEST(Env, EpisodeReturnIsSumOfRewards) {
  for (GameId g : kAllGames) {
    EnvConfig c;
    c.game = g;
    c.rand_seed = 21;
    Env env(c);
    env.Reset();
    RngStream policy(5);
    double sum = 0;
    for (int t = 0; t < 2000; ++t) {
      const StepResult r = env.Step(static_cast<int>(policy.NextUint(kNumActions))).first;
      sum += r.reward;
      ASSERT_DOUBLE_EQ(env.state().episode_return, sum);
      if (r.done) {
        ASSERT_DOUBLE_EQ(r.info.episode_return, sum);
        env.Reset();
        sum = 0;
      }
    }
  }
}

TEST(Env, ExplorationPinsOneSeed) {
  for (GameId g : kAllGames) {
    if (!SupportsExplorationMode(g)) continue;
    EnvConfig c;
    c.game = g;
    c.mode = Mode::kExploration;
    c.max_episode_steps = 2;
    Env env(c);
    std::set<uint32_t> seeds;
    for (int e = 0; e < 20; ++e) {
      env.Reset();
      seeds.insert(env.state().level_seed);
    }
    EXPECT_EQ(seeds.size(), 1u) << GameName(g);
  }
}

}  // namespace
}  // namespace procarcade
