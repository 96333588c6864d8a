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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "harness/episode_log.h"
#include "harness/genstats.h"
#include "harness/norm.h"
#include "harness/report.h"
#include "harness/rollout.h"
#include "procarcade/error.h"

namespace procarcade::harness {
namespace {

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("procarcade_test_" + name)).string();
}

// Transcribed independently of the shipped table: {hard min, hard max, easy min, easy max}.
struct Row {
  const char* game;
  double v[4];
};
constexpr Row kPublished[] = {
    {"coinrun", {5, 10, 5, 10}},       {"starpilot", {1.5, 35, 2.5, 64}},
    {"caveflyer", {2, 13.4, 3.5, 12}}, {"dodgeball", {1.5, 19, 1.5, 19}},
    {"fruitbot", {-.5, 27.2, -1.5, 32.4}}, {"chaser", {.5, 14.2, .5, 13}},
    {"miner", {1.5, 20, 1.5, 13}},     {"jumper", {1, 10, 3, 10}},
    {"leaper", {1.5, 10, 3, 10}},      {"maze", {4, 10, 5, 10}},
    {"bigfish", {0, 40, 1, 40}},       {"heist", {2, 10, 3.5, 10}},
    {"climber", {1, 12.6, 2, 12.6}},   {"plunder", {3, 30, 4.5, 30}},
    {"ninja", {2, 10, 3.5, 10}},       {"bossfight", {.5, 13, .5, 13}},
};

TEST(Norm, TableMatchesPublishedConstants) {
  ASSERT_EQ(NormTable().size(), std::size(kPublished));
  for (const Row& r : kPublished) {
    const NormConstants hard = ConstantsFor(r.game, Difficulty::kHard);
    const NormConstants easy = ConstantsFor(r.game, Difficulty::kEasy);
    EXPECT_EQ(hard.r_min, r.v[0]) << r.game;
    EXPECT_EQ(hard.r_max, r.v[1]) << r.game;
    EXPECT_EQ(easy.r_min, r.v[2]) << r.game;
    EXPECT_EQ(easy.r_max, r.v[3]) << r.game;
    EXPECT_GT(hard.r_max, hard.r_min);
    EXPECT_GT(easy.r_max, easy.r_min);
    for (Difficulty d : {Difficulty::kEasy, Difficulty::kHard}) {
      const NormConstants k = ConstantsFor(r.game, d);
      EXPECT_NEAR(NormalizedReturn(k.r_min, r.game, d), 0.0, 1e-9);
      EXPECT_NEAR(NormalizedReturn(k.r_max, r.game, d), 1.0, 1e-9);
    }
  }
}

TEST(Norm, HandComputedValues) {
  EXPECT_NEAR(NormalizedReturn(10, "coinrun", Difficulty::kHard), 1.0, 1e-9);
  EXPECT_NEAR(NormalizedReturn(4, "maze", Difficulty::kHard), 0.0, 1e-9);
  EXPECT_NEAR(NormalizedReturn(20, "bigfish", Difficulty::kHard), 0.5, 1e-9);
  EXPECT_NEAR(NormalizedReturn(7.25, "miner", Difficulty::kEasy), 0.5, 1e-9);
  EXPECT_NEAR(NormalizedReturn(7.35, "chaser", Difficulty::kHard), 0.5, 1e-9);
  // Unclamped on both sides.
  EXPECT_NEAR(NormalizedReturn(1, "maze", Difficulty::kHard), -0.5, 1e-9);
  EXPECT_NEAR(NormalizedReturn(24.8, "caveflyer", Difficulty::kHard), 2.0, 1e-9);
}

TEST(Norm, UnknownGameIsConfigError) {
  try {
    NormalizedReturn(1, "pong", Difficulty::kHard);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
}

TEST(Report, PoolsBatchesAndAveragesRows) {
  const std::vector<EpisodeBatch> batches = {
      {"coinrun", Difficulty::kHard, {10, 5}},
      {"coinrun", Difficulty::kHard, {10, 10}},
      {"maze", Difficulty::kHard, {4}},
      {"ninja", Difficulty::kEasy, {}},
  };
  const ScoreReport r = BuildReport(batches);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].game, "coinrun");
  EXPECT_EQ(r.rows[0].episodes, 4);
  EXPECT_NEAR(r.rows[0].mean_return, 8.75, 1e-12);
  EXPECT_NEAR(r.rows[0].mean_normalized, 0.75, 1e-12);
  EXPECT_NEAR(r.rows[1].mean_normalized, 0.0, 1e-12);
  EXPECT_NEAR(r.mean_normalized, 0.375, 1e-12);
  EXPECT_EQ(BuildReport({}).mean_normalized, 0.0);
  EXPECT_EQ(ToJson(r)["games"].size(), 2u);
}

TEST(Rollout, MazeRandomReturnsAreZeroOrTen) {
  RolloutOptions o;
  o.config.env.game = GameId::kMaze;
  o.config.env.difficulty = Difficulty::kEasy;
  o.config.env.rand_seed = 5;
  o.config.env.max_episode_steps = 300;
  o.num_envs = 8;
  o.episodes = 100;
  const RolloutResult r = Rollout(o);
  ASSERT_EQ(r.returns.size(), 100u);
  int wins = 0;
  for (double v : r.returns) {
    EXPECT_TRUE(v == 0 || v == 10) << v;
    wins += v == 10;
  }
  EXPECT_GT(wins, 0);
  ASSERT_EQ(r.report.rows.size(), 1u);
  EXPECT_EQ(r.report.rows[0].episodes, 100);
}

TEST(Rollout, ReplayReproducesAndTamperingIsCaught) {
  const std::string path = TempPath("replay.jsonl");
  RolloutOptions o;
  o.config.env.game = GameId::kChaser;
  o.config.env.rand_seed = 77;
  o.config.env.max_episode_steps = 120;
  o.num_envs = 3;
  o.episodes = 6;
  o.log_path = path;
  const RolloutResult first = Rollout(o);

  const EpisodeLog log = ReadEpisodeLog(path);
  EXPECT_EQ(log.header.num_envs, 3);
  EXPECT_EQ(log.header.config.env.rand_seed, 77u);
  EXPECT_EQ(log.header.config.env.game, GameId::kChaser);
  EXPECT_EQ(static_cast<int64_t>(log.steps.size()), first.ticks * 3);

  RolloutOptions replay;
  replay.policy = PolicyKind::kReplay;
  replay.replay = &log;
  replay.episodes = 6;
  const RolloutResult second = Rollout(replay);
  EXPECT_EQ(second.returns, first.returns);

  EpisodeLog tampered = log;
  tampered.steps[40].state_hash ^= 1;
  replay.replay = &tampered;
  try {
    Rollout(replay);
    FAIL() << "tampered log replayed cleanly";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDeterminism);
    EXPECT_NE(std::string(e.what()).find("tick " + std::to_string(tampered.steps[40].t)), std::string::npos)
        << e.what();
  }
  std::filesystem::remove(path);
}

TEST(Rollout, ScriptedPolicyPlaysScriptThenNoops) {
  RolloutOptions o;
  o.config.env.game = GameId::kMaze;
  o.config.env.max_episode_steps = 10;
  o.policy = PolicyKind::kScripted;
  o.script = {7, 7, 7};
  o.log_path = TempPath("script.jsonl");
  Rollout(o);
  const EpisodeLog log = ReadEpisodeLog(o.log_path);
  ASSERT_GE(log.steps.size(), 4u);
  EXPECT_EQ(log.steps[0].action, 7);
  EXPECT_EQ(log.steps[2].action, 7);
  if (!log.steps[2].done) EXPECT_EQ(log.steps[3].action, 4);
  std::filesystem::remove(o.log_path);
}

TEST(EpisodeLog, MalformedFilesAreConfigErrors) {
  const std::string path = TempPath("bad.jsonl");
  std::ofstream(path) << "{not json\n";
  try {
    ReadEpisodeLog(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(ReadEpisodeLog(TempPath("missing.jsonl")), Error);
}

TEST(EpisodeLog, ActionScriptParsing) {
  const std::string path = TempPath("actions.txt");
  std::ofstream(path) << "1 2\n14 0\n";
  EXPECT_EQ(ReadActionScript(path), (std::vector<int32_t>{1, 2, 14, 0}));
  std::ofstream(path) << "1 15\n";
  EXPECT_THROW(ReadActionScript(path), Error);
  std::filesystem::remove(path);
}

TEST(GenStats, ReportsVerdictsAndCorrelation) {
  GenStatsOptions o;
  o.game = GameId::kLeaper;
  o.seeds = 300;
  const nlohmann::json j = GenStats(o);
  EXPECT_EQ(j["solvable"].get<int64_t>() + j["unsolvable"].get<int64_t>() + j["unknown"].get<int64_t>(), 300);
  EXPECT_EQ(j["reproducible"].get<int64_t>(), 300);
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {2, 4, 6, 8};
  const std::vector<double> c = {5, 5, 5, 5};
  EXPECT_NEAR(Correlation(a, b), 1.0, 1e-12);
  EXPECT_EQ(Correlation(a, c), 0.0);
}

}  // namespace
}  // namespace procarcade::harness
