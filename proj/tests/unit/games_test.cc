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

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "procarcade/env.h"
#include "procarcade/game.h"
#include "procarcade/levelgen.h"
#include "procarcade/params.h"
#include "procarcade/render.h"
#include "test_util.h"

namespace procarcade {
namespace {

using testing::SolutionFor;

// One tick with the engine's bookkeeping, without the episode wrapper.
TickOutcome Advance(GameState& s, int action) {
  const TickOutcome out = GetGame(s.game).Tick(s, DecodeAction(action));
  ++s.step_count;
  ++s.level_step;
  return out;
}

GameState Fresh(GameId game, uint32_t seed, Difficulty d = Difficulty::kHard) {
  return GenerateLevel(game, d, false, seed);
}

Cell PlayerTile(const GameState& s) { return {s.player.TileX(), s.player.TileY()}; }

double Pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ma += a[i] / n;
    mb += b[i] / n;
  }
  double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

double StatValue(const GameState& s, const std::string& name) {
  for (const LevelStat& st : GetGame(s.game).Stats(s)) {
    if (st.name == name) return st.value;
  }
  ADD_FAILURE() << "no stat " << name;
  return 0;
}

// ---------------------------------------------------------------- all games

TEST(AllGames, WitnessReplaysToCompletion) {
  for (GameId g : kAllGames) {
    if (g == GameId::kChaser) continue;  // its oracle ignores enemies
    for (uint32_t seed = 0; seed < 100; ++seed) {
      GameState s = Fresh(g, seed);
      const double bound = GetGame(g).LevelMaxReturn(s);
      const std::vector<int> plan = SolutionFor(s);
      if (plan.empty()) continue;  // unknown verdicts are counted elsewhere
      double total = 0;
      TickOutcome last;
      for (size_t i = 0; i < plan.size(); ++i) {
        last = Advance(s, plan[i]);
        total += last.reward;
        ASSERT_FALSE(last.failed) << GameName(g) << " seed " << seed << " tick " << i;
        if (i + 1 < plan.size()) ASSERT_FALSE(last.level_complete) << GameName(g) << " seed " << seed;
      }
      EXPECT_TRUE(last.level_complete) << GameName(g) << " seed " << seed;
      EXPECT_LE(total, bound + 1e-9) << GameName(g) << " seed " << seed;
    }
  }
}

TEST(AllGames, RandomEpisodesEndWithinStepLimit) {
  for (GameId g : kAllGames) {
    EnvConfig c;
    c.game = g;
    c.rand_seed = 77;
    c.max_episode_steps = 400;
    Env env(c);
    env.set_render(false);
    RngStream policy = DeriveStream(77, 0, "policy");
    for (int e = 0; e < 30; ++e) {
      env.Reset();
      StepResult r;
      while (!r.done) r = env.Step(static_cast<int>(policy.NextUint(kNumActions))).first;
      EXPECT_LE(env.state().step_count, c.max_episode_steps) << GameName(g);
    }
  }
}

TEST(AllGames, GenerationIsAFunctionOfTheSeed) {
  for (GameId g : kAllGames) {
    for (uint32_t seed : {0u, 1u, 12345u, 2147483647u}) {
      EXPECT_EQ(StateHash(Fresh(g, seed)), StateHash(Fresh(g, seed))) << GameName(g);
    }
    EXPECT_NE(StateHash(Fresh(g, 1)), StateHash(Fresh(g, 2))) << GameName(g);
  }
}

// ---------------------------------------------------------------- maze

TEST(MazeGame, SizesCoverTheWholeRange) {
  std::set<std::pair<int, int>> sizes;
  for (uint32_t seed = 0; seed < 10000; ++seed) {
    const GameState s = Fresh(GameId::kMaze, seed);
    const int w = s.terrain.width() / 2;
    const int h = s.terrain.height() / 2;
    ASSERT_GE(w, 3);
    ASSERT_LE(w, 25);
    ASSERT_GE(h, 3);
    ASSERT_LE(h, 25);
    sizes.insert({w, 0});
    sizes.insert({0, h});
  }
  EXPECT_EQ(sizes.size(), 2u * 23u);
}

TEST(MazeGame, CheeseNeverUnderMouse) {
  for (uint32_t seed = 0; seed < 2000; ++seed) {
    const GameState s = Fresh(GameId::kMaze, seed);
    const Cell m = PlayerTile(s);
    EXPECT_NE(s.items.at(m.x, m.y), Item::kCheese);
    EXPECT_NE(s.terrain.at(m.x, m.y), Tile::kWall);
  }
}

// ---------------------------------------------------------------- heist

// Fixpoint of key collection; lock colors in 'sealed' never open.
Grid<uint8_t> HeistRegion(const GameState& s, uint32_t sealed) {
  constexpr Item kKeys[3] = {Item::kKeyRed, Item::kKeyGreen, Item::kKeyBlue};
  constexpr Item kLocks[3] = {Item::kLockRed, Item::kLockGreen, Item::kLockBlue};
  uint32_t held = 0;
  Grid<uint8_t> seen;
  for (;;) {
    seen = Grid<uint8_t>(s.terrain.width(), s.terrain.height(), 0);
    std::vector<Cell> stack{PlayerTile(s)};
    seen.at(stack[0].x, stack[0].y) = 1;
    uint32_t found = held;
    while (!stack.empty()) {
      const Cell c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        if (s.items.at(c.x, c.y) == kKeys[k]) found |= 1u << k;
      }
      for (const Cell& d : kDirs4) {
        const Cell n{c.x + d.x, c.y + d.y};
        if (s.terrain.Get(n.x, n.y, Tile::kWall) == Tile::kWall || seen.at(n.x, n.y)) continue;
        bool locked = false;
        for (int k = 0; k < 3; ++k) {
          if (s.items.at(n.x, n.y) == kLocks[k] && (!(held >> k & 1) || (sealed >> k & 1))) {
            locked = true;
          }
        }
        if (locked) continue;
        seen.at(n.x, n.y) = 1;
        stack.push_back(n);
      }
    }
    if (found == held) return seen;
    held = found;
  }
}

TEST(HeistGame, KeysNeverBehindTheirOwnLock) {
  constexpr Item kKeys[3] = {Item::kKeyRed, Item::kKeyGreen, Item::kKeyBlue};
  int three_lock_levels = 0;
  for (uint32_t seed = 0; seed < 10000; ++seed) {
    const GameState s = Fresh(GameId::kHeist, seed);
    int locks = 0;
    for (int k = 0; k < 3; ++k) {
      Cell key{-1, -1};
      for (int y = 0; y < s.items.height(); ++y) {
        for (int x = 0; x < s.items.width(); ++x) {
          if (s.items.at(x, y) == kKeys[k]) key = {x, y};
        }
      }
      if (key.x < 0) continue;
      ++locks;
      EXPECT_TRUE(HeistRegion(s, 1u << k).at(key.x, key.y)) << "seed " << seed << " color " << k;
    }
    three_lock_levels += locks == 3;
    const Grid<uint8_t> all = HeistRegion(s, 0);
    bool gem = false;
    for (int y = 0; y < s.items.height(); ++y) {
      for (int x = 0; x < s.items.width(); ++x) gem |= s.items.at(x, y) == Item::kGem && all.at(x, y);
    }
    EXPECT_TRUE(gem) << "seed " << seed;
  }
  EXPECT_GT(three_lock_levels, 100);
}

TEST(HeistGame, LockWithoutKeyBlocks) {
  for (uint32_t seed = 0; seed < 500; ++seed) {
    GameState s = Fresh(GameId::kHeist, seed);
    const Cell at = PlayerTile(s);
    for (const Cell& d : kDirs4) {
      const Item item = s.items.Get(at.x + d.x, at.y + d.y, Item::kNone);
      if (item != Item::kLockRed && item != Item::kLockGreen && item != Item::kLockBlue) continue;
      Advance(s, EncodeMove(d.x, -d.y));
      EXPECT_EQ(PlayerTile(s), at);
      return;
    }
  }
  GTEST_SKIP() << "no lock adjacent to a spawn in 500 seeds";
}

// ---------------------------------------------------------------- chaser

TEST(ChaserGame, StarsInDistinctQuadrants) {
  for (uint32_t seed = 0; seed < 1000; ++seed) {
    const GameState s = Fresh(GameId::kChaser, seed);
    std::set<int> quadrants;
    int stars = 0;
    for (int y = 0; y < s.items.height(); ++y) {
      for (int x = 0; x < s.items.width(); ++x) {
        if (s.items.at(x, y) != Item::kStar) continue;
        ++stars;
        quadrants.insert((x >= s.items.width() / 2 ? 1 : 0) + (y >= s.items.height() / 2 ? 2 : 0));
      }
    }
    EXPECT_EQ(stars, 3);
    EXPECT_EQ(quadrants.size(), 3u) << "seed " << seed;
  }
}

// Places the lone enemy next to the player; returns the move that reaches it.
int LoneEnemyBeside(GameState& s) {
  s.entities.resize(1);
  const Cell at = PlayerTile(s);
  for (const Cell& d : kDirs4) {
    const Cell n{at.x + d.x, at.y + d.y};
    if (s.terrain.Get(n.x, n.y, Tile::kWall) == Tile::kWall) continue;
    s.entities[0].kind = EntityKind::kEnemy;
    s.entities[0].pos = {Fixed::FromInt(n.x), Fixed::FromInt(n.y)};
    s.entities[0].dir = -1;
    return EncodeMove(d.x, -d.y);
  }
  return -1;
}

TEST(ChaserGame, EatenEnemyBecomesEggAndHatches) {
  GameState s = Fresh(GameId::kChaser, 5);
  const ChaserParams& p = s.tables().chaser;
  const int move = LoneEnemyBeside(s);
  ASSERT_GE(move, 0);
  s.global_timer = 100000;
  const TickOutcome eat = Advance(s, move);
  EXPECT_FALSE(eat.failed);
  ASSERT_EQ(s.entities.size(), 1u);
  EXPECT_EQ(s.entities[0].kind, EntityKind::kEgg);
  for (int t = 1; t < p.hatch_ticks; ++t) {
    Advance(s, kNoopAction);
    ASSERT_EQ(s.entities[0].kind, EntityKind::kEgg) << "tick " << t;
  }
  Advance(s, kNoopAction);
  EXPECT_EQ(s.entities[0].kind, EntityKind::kEnemy);
}

TEST(ChaserGame, EnemyCountConstantThroughEatHatchCycles) {
  for (uint32_t seed = 0; seed < 40; ++seed) {
    GameState s = Fresh(GameId::kChaser, seed);
    const int enemies = s.tables().chaser.enemies;
    s.global_timer = 100000;
    RngStream policy(seed);
    for (int t = 0; t < 600; ++t) {
      const TickOutcome out = Advance(s, static_cast<int>(policy.NextUint(kNumActions)));
      ASSERT_EQ(static_cast<int>(s.entities.size()), enemies);
      if (out.level_complete) break;
    }
  }
}

TEST(ChaserGame, TouchingHarmfulEnemyKills) {
  GameState s = Fresh(GameId::kChaser, 5);
  const int move = LoneEnemyBeside(s);
  ASSERT_GE(move, 0);
  s.global_timer = 0;
  EXPECT_TRUE(Advance(s, move).failed);
}

// ---------------------------------------------------------------- miner

enum Code { kE, kS, kB, kD };  // empty, soil, boulder, diamond

// 7x5 board: 3x3 window at x,y in [1,3], rock around, player pocketed at (5,2).
GameState MinerBoard(const std::array<int, 9>& window) {
  GameState s = Fresh(GameId::kMiner, 0);
  s.terrain = GridLayout(7, 5, Tile::kWall);
  s.items = Grid<Item>(7, 5);
  s.flags = Grid<uint8_t>(7, 5, 0);
  s.entities.clear();
  for (int i = 0; i < 9; ++i) {
    const int x = 1 + i % 3;
    const int y = 1 + i / 3;
    s.terrain.at(x, y) = window[i] == kS ? Tile::kDirt : Tile::kOpen;
    if (window[i] == kB) s.items.at(x, y) = Item::kBoulder;
    if (window[i] == kD) s.items.at(x, y) = Item::kDiamond;
  }
  s.terrain.at(5, 2) = Tile::kOpen;
  s.player.pos = {Fixed::FromInt(5), Fixed::FromInt(2)};
  s.goal_remaining = 1;
  return s;
}

// Gravity rules, applied bottom-up with each object moving at most once.
std::pair<std::array<int, 9>, std::array<int, 9>> MinerReference(std::array<int, 9> w) {
  std::array<int, 9> falling{};
  std::array<bool, 9> moved{};
  const auto rounded = [](int c) { return c == kB || c == kD; };
  const auto free = [&](int x, int y) { return x >= 0 && x < 3 && y >= 0 && y < 3 && w[y * 3 + x] == kE; };
  for (int y = 2; y >= 0; --y) {
    for (int x = 0; x < 3; ++x) {
      const int i = y * 3 + x;
      if (!rounded(w[i]) || moved[i]) continue;
      const int below = y < 2 ? w[i + 3] : -1;  // -1: rock
      int to = -1;
      if (free(x, y + 1)) {
        to = i + 3;
      } else if (below >= 0 && rounded(below) && free(x - 1, y) && free(x - 1, y + 1)) {
        to = i - 1;
      } else if (below >= 0 && rounded(below) && free(x + 1, y) && free(x + 1, y + 1)) {
        to = i + 1;
      }
      if (to < 0) {
        falling[i] = 0;
        continue;
      }
      w[to] = w[i];
      w[i] = kE;
      falling[to] = 1;
      moved[to] = true;
    }
  }
  return {w, falling};
}

TEST(MinerGame, GravityMatchesRuleTableOverAllWindows) {
  std::array<int, 9> w{};
  int64_t checked = 0;
  for (int code = 0; code < 262144; ++code) {
    for (int i = 0, c = code; i < 9; ++i, c /= 4) w[i] = c % 4;
    GameState s = MinerBoard(w);
    const TickOutcome out = Advance(s, kNoopAction);
    ASSERT_FALSE(out.failed);
    const auto [want, falling] = MinerReference(w);
    for (int i = 0; i < 9; ++i) {
      const int x = 1 + i % 3;
      const int y = 1 + i / 3;
      int got = kE;
      if (s.terrain.at(x, y) == Tile::kDirt) got = kS;
      if (s.items.at(x, y) == Item::kBoulder) got = kB;
      if (s.items.at(x, y) == Item::kDiamond) got = kD;
      ASSERT_EQ(got, want[i]) << "window " << code << " cell " << i;
      ASSERT_EQ(s.flags.at(x, y) != 0, falling[i] != 0) << "window " << code << " cell " << i;
    }
    ++checked;
  }
  EXPECT_EQ(checked, 262144);
}

TEST(MinerGame, NamedGravityCases) {
  // Boulder over empty falls one cell per tick.
  GameState s = MinerBoard({kB, kE, kE, kE, kE, kE, kE, kE, kE});
  Advance(s, kNoopAction);
  EXPECT_EQ(s.items.at(1, 2), Item::kBoulder);
  EXPECT_EQ(s.items.at(1, 1), Item::kNone);
  Advance(s, kNoopAction);
  EXPECT_EQ(s.items.at(1, 3), Item::kBoulder);

  // Boulder on boulder with both sides open rolls left first.
  s = MinerBoard({kE, kE, kE, kE, kB, kE, kS, kB, kS});
  s.terrain.at(1, 3) = Tile::kOpen;
  s.terrain.at(3, 3) = Tile::kOpen;
  Advance(s, kNoopAction);
  EXPECT_EQ(s.items.at(1, 2), Item::kBoulder);
  EXPECT_EQ(s.items.at(2, 2), Item::kNone);

  // Boulder resting on soil stays put.
  s = MinerBoard({kE, kB, kE, kE, kS, kE, kE, kE, kE});
  Advance(s, kNoopAction);
  EXPECT_EQ(s.items.at(2, 1), Item::kBoulder);
}

TEST(MinerGame, FallingObjectKillsRestingOneDoesNot) {
  // Player digs under a resting boulder: survives.
  GameState s = MinerBoard({kE, kB, kE, kE, kS, kE, kE, kE, kE});
  s.terrain.at(4, 2) = Tile::kOpen;
  s.terrain.at(3, 2) = Tile::kOpen;
  s.player.pos = {Fixed::FromInt(3), Fixed::FromInt(2)};
  EXPECT_FALSE(Advance(s, EncodeMove(-1, 0)).failed);
  EXPECT_EQ(PlayerTile(s), (Cell{2, 2}));
  EXPECT_EQ(s.items.at(2, 1), Item::kBoulder);

  // A boulder already falling onto the player kills.
  s = MinerBoard({kE, kB, kE, kE, kE, kE, kE, kE, kE});
  Advance(s, kNoopAction);  // now falling at (2, 2)
  s.terrain.at(2, 3) = Tile::kOpen;
  s.player.pos = {Fixed::FromInt(2), Fixed::FromInt(3)};
  EXPECT_TRUE(Advance(s, kNoopAction).failed);
}

TEST(MinerGame, NoObjectSpawnsNextToPlayer) {
  for (uint32_t seed = 0; seed < 2000; ++seed) {
    const GameState s = Fresh(GameId::kMiner, seed);
    const Cell p = PlayerTile(s);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        EXPECT_EQ(s.items.Get(p.x + dx, p.y + dy, Item::kNone), Item::kNone) << "seed " << seed;
      }
    }
  }
}

TEST(MinerGame, FullClearPaysDiamondsPlusCompletion) {
  const GameState fresh = Fresh(GameId::kMiner, 11);
  const MinerParams& p = fresh.tables().miner;
  GameState s = fresh;
  double total = 0;
  for (int a : SolutionFor(s)) total += Advance(s, a).reward;
  EXPECT_EQ(total, fresh.goal_total * p.diamond_reward + p.completion_reward);
  EXPECT_EQ(total, 20.0);
}

// ---------------------------------------------------------------- leaper

TEST(LeaperGame, RoadAndWaterCountsCorrelate) {
  for (Difficulty d : {Difficulty::kEasy, Difficulty::kHard}) {
    std::vector<double> roads, waters;
    for (uint32_t seed = 0; seed < 10000; ++seed) {
      const GameState s = Fresh(GameId::kLeaper, seed, d);
      roads.push_back(StatValue(s, "road_lanes"));
      waters.push_back(StatValue(s, "water_lanes"));
    }
    EXPECT_GT(Pearson(roads, waters), 0.3) << DifficultyName(d);
  }
}

TEST(LeaperGame, LogCarriesPlayer) {
  int carried = 0;
  for (uint32_t seed = 0; seed < 200 && carried < 20; ++seed) {
    GameState s = Fresh(GameId::kLeaper, seed);
    for (size_t i = 0; i < s.entities.size(); ++i) {
      const Entity log = s.entities[i];
      if (log.kind != EntityKind::kLog) continue;
      GameState t = s;
      t.player.pos = log.pos;
      for (int tick = 0; tick < 6; ++tick) {
        const Fixed before = t.player.pos.x;
        const TickOutcome out = Advance(t, kNoopAction);
        if (out.failed) break;
        EXPECT_EQ(t.player.pos, t.entities[i].pos) << "seed " << seed;
        carried += t.player.pos.x != before;
      }
      break;
    }
  }
  EXPECT_GT(carried, 0);
}

TEST(LeaperGame, OpenWaterDrowns) {
  for (uint32_t seed = 0; seed < 200; ++seed) {
    GameState s = Fresh(GameId::kLeaper, seed);
    for (int y = 0; y < s.terrain.height(); ++y) {
      if (s.terrain.at(0, y) != Tile::kWater) continue;
      for (int x = 0; x < s.terrain.width(); ++x) {
        GameState t = s;
        t.player.pos = {Fixed::FromInt(x), Fixed::FromInt(y)};
        bool log_near = false;
        for (const Entity& e : t.entities) {
          log_near |= e.a == y && std::abs(e.pos.x.Floor() - x) <= 1;
        }
        if (log_near) continue;
        const TickOutcome out = Advance(t, kNoopAction);
        EXPECT_TRUE(out.failed);
        EXPECT_EQ(out.reward, 0);
        return;
      }
    }
  }
  FAIL() << "no log-free water tile found";
}

// ---------------------------------------------------------------- coinrun

Cell FindItem(const GameState& s, Item item) {
  for (int y = 0; y < s.items.height(); ++y) {
    for (int x = 0; x < s.items.width(); ++x) {
      if (s.items.at(x, y) == item) return {x, y};
    }
  }
  return {-1, -1};
}

PlatformLevel Regenerate(const GameState& s, const PlatformParams& params) {
  RngStream layout = DeriveStream(s.generation_attempt, s.level_seed, "layout");
  return PlatformSequence(layout, params);
}

TEST(CoinRunGame, SpawnOnFirstLedgeCoinOnLast) {
  for (uint32_t seed = 0; seed < 1000; ++seed) {
    const GameState s = Fresh(GameId::kCoinRun, seed);
    const PlatformLevel level = Regenerate(s, s.tables().coinrun.platforms);
    const Platform& first = level.platforms.front();
    Platform last = first;
    for (const Platform& p : level.platforms) {
      if (p.critical) last = p;
    }
    const Cell spawn = PlayerTile(s);
    const Cell coin = FindItem(s, Item::kCoin);
    EXPECT_GE(spawn.x, first.x0);
    EXPECT_LE(spawn.x, first.x1);
    EXPECT_GE(coin.x, last.x0);
    EXPECT_LE(coin.x, last.x1);
    for (const Platform& p : level.platforms) {
      EXPECT_LE(p.x0, coin.x);
      EXPECT_GE(p.x1, spawn.x);
    }
  }
}

TEST(CoinRunGame, PacersArePeriodic) {
  int checked = 0;
  for (uint32_t seed = 0; seed < 100; ++seed) {
    GameState s = Fresh(GameId::kCoinRun, seed);
    if (s.entities.empty()) continue;
    std::vector<std::vector<Fixed>> xs(s.entities.size());
    for (int t = 0; t < 40; ++t) {
      for (size_t i = 0; i < s.entities.size(); ++i) xs[i].push_back(s.entities[i].pos.x);
      Advance(s, kNoopAction);
    }
    for (size_t i = 0; i < s.entities.size(); ++i) {
      const int period = 2 * s.entities[i].b;
      for (int t = 0; t + period < 40; ++t) EXPECT_EQ(xs[i][t], xs[i][t + period]);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

// ---------------------------------------------------------------- ninja

// First seed whose spawn column is open sky up to the top row.
GameState NinjaOpenSky() {
  for (uint32_t seed = 0;; ++seed) {
    GameState s = Fresh(GameId::kNinja, seed);
    const Cell p = PlayerTile(s);
    bool clear = true;
    for (int y = 0; y < p.y; ++y) {
      clear &= !IsSolid(s.terrain.at(p.x, y)) && s.items.at(p.x, y) == Item::kNone;
    }
    if (clear) return s;
  }
}

TEST(NinjaGame, JumpHeightMonotoneInChargeAndCapped) {
  const GameState base = NinjaOpenSky();
  const JumpModel& m = base.tables().ninja.platforms.jump;
  int previous = -1;
  std::vector<int> heights;
  for (int charge = 1; charge <= m.charge_cap + 3; ++charge) {
    GameState s = base;
    for (int t = 0; t < charge; ++t) Advance(s, EncodeMove(0, 1));
    int top = s.player.TileY();
    for (int t = 0; t < 12; ++t) {
      Advance(s, kNoopAction);
      top = std::min(top, s.player.TileY());
    }
    const int rise = base.player.TileY() - top;
    EXPECT_GE(rise, previous) << "charge " << charge;
    EXPECT_GT(rise, 0);
    previous = rise;
    heights.push_back(rise);
  }
  for (int charge = m.charge_cap; charge <= m.charge_cap + 3; ++charge) {
    EXPECT_EQ(heights[charge - 1], heights[m.charge_cap - 1]);
  }
}

TEST(NinjaGame, ThrownStarClearsBomb) {
  for (uint32_t seed = 0; seed < 500; ++seed) {
    GameState s = Fresh(GameId::kNinja, seed);
    const Cell p = PlayerTile(s);
    if (!s.terrain.InBounds(p.x + 2, p.y) || IsSolid(s.terrain.at(p.x + 1, p.y)) ||
        IsSolid(s.terrain.at(p.x + 2, p.y)) || s.items.at(p.x + 1, p.y) != Item::kNone) {
      continue;
    }
    s.items.at(p.x + 2, p.y) = Item::kBomb;
    GameState idle = s;
    Advance(idle, kNoopAction);
    EXPECT_EQ(idle.items.at(p.x + 2, p.y), Item::kBomb);
    EXPECT_FALSE(Advance(s, 9).failed);
    EXPECT_EQ(s.items.at(p.x + 2, p.y), Item::kNone);
    return;
  }
  FAIL() << "no spawn with two open tiles ahead";
}

TEST(NinjaGame, BombContactKills) {
  for (uint32_t seed = 0; seed < 500; ++seed) {
    GameState s = Fresh(GameId::kNinja, seed);
    const Cell p = PlayerTile(s);
    if (!s.terrain.InBounds(p.x + 1, p.y) || IsSolid(s.terrain.at(p.x + 1, p.y))) continue;
    s.items.at(p.x + 1, p.y) = Item::kBomb;
    EXPECT_TRUE(Advance(s, EncodeMove(1, 0)).failed);
    return;
  }
  FAIL() << "no spawn with an open tile ahead";
}

TEST(NinjaGame, DecoyLedgesNeverOnWitness) {
  int decoys = 0;
  for (uint32_t seed = 0; seed < 2000; ++seed) {
    const GameState s = Fresh(GameId::kNinja, seed);
    const PlatformLevel level = Regenerate(s, s.tables().ninja.platforms);
    const SolveResult r = SolvabilityCheck(s);
    ASSERT_EQ(r.verdict, Verdict::kSolvable);
    for (const Platform& p : level.platforms) {
      if (p.critical) continue;
      ++decoys;
      for (const Cell& c : r.witness_path) {
        const bool on = c.y == p.surface - 1 && c.x >= p.x0 && c.x <= p.x1;
        EXPECT_FALSE(on) << "seed " << seed << " stands on a decoy at " << c.x << "," << c.y;
      }
    }
  }
  EXPECT_GT(decoys, 0);
}

// ---------------------------------------------------------------- bigfish

Entity FishAt(const GameState& s, Fixed width) {
  Entity f;
  f.kind = EntityKind::kFish;
  f.pos = s.player.pos;
  f.w = width;
  f.h = Fixed::FromRaw(width.raw() * 3 / 4);
  return f;
}

TEST(BigFishGame, EqualWidthContactIsDeath) {
  GameState s = Fresh(GameId::kBigFish, 3);
  s.entities = {FishAt(s, s.player.w)};
  const TickOutcome out = Advance(s, kNoopAction);
  EXPECT_TRUE(out.failed);
  EXPECT_EQ(out.reward, 0);
}

TEST(BigFishGame, SmallerFishIsEatenAndPlayerGrows) {
  GameState s = Fresh(GameId::kBigFish, 3);
  const Fixed before = s.player.w;
  s.entities = {FishAt(s, Fixed::FromRaw(before.raw() - 1))};
  const TickOutcome out = Advance(s, kNoopAction);
  EXPECT_FALSE(out.failed);
  EXPECT_EQ(out.reward, s.tables().bigfish.fish_reward);
  EXPECT_GT(s.player.w, before);
}

TEST(BigFishGame, WidthStrictlyIncreasesWithEatsAndReturnBounded) {
  const GameState fresh = Fresh(GameId::kBigFish, 0);
  EXPECT_EQ(GetGame(GameId::kBigFish).LevelMaxReturn(fresh), 40.0);
  for (uint32_t seed = 0; seed < 60; ++seed) {
    GameState s = Fresh(GameId::kBigFish, seed);
    const std::vector<int> plan = SolutionFor(s);
    if (plan.empty()) continue;
    double total = 0;
    Fixed width = s.player.w;
    for (int a : plan) {
      const TickOutcome out = Advance(s, a);
      total += out.reward;
      if (out.reward > 0 && !out.level_complete) {
        EXPECT_GT(s.player.w, width);
        width = s.player.w;
      } else if (!out.level_complete) {
        EXPECT_EQ(s.player.w, width);
      }
    }
    EXPECT_LE(total, 40.0);
  }
}

// ---------------------------------------------------------------- caveflyer

TEST(CaveFlyerGame, FullTurnReturnsToStartHeading) {
  GameState s = Fresh(GameId::kCaveFlyer, 4);
  const int step = s.tables().caveflyer.rotate_step;
  const uint8_t start = s.player.heading;
  const FixedVec pos = s.player.pos;
  for (int t = 1; t <= 256; ++t) {
    Advance(s, EncodeMove(-1, 0));
    ASSERT_EQ(s.player.heading, static_cast<uint8_t>(start + t * step));
  }
  EXPECT_EQ(s.player.heading, start);
  EXPECT_EQ(s.player.pos, pos);
}

TEST(CaveFlyerGame, ThrustFollowsALatticeRay) {
  const GameState fresh = Fresh(GameId::kCaveFlyer, 4);
  const Fixed speed = fresh.tables().caveflyer.speed;
  for (int heading = 0; heading < 256; heading += 8) {
    GameState s = fresh;
    s.player.heading = static_cast<uint8_t>(heading);
    const FixedVec start = s.player.pos;
    const int32_t sx = static_cast<int64_t>(speed.raw()) * Cos256(uint8_t(heading)).raw() >> 8;
    const int32_t sy = static_cast<int64_t>(speed.raw()) * Sin256(uint8_t(heading)).raw() >> 8;
    for (int n = 1; n <= 20; ++n) {
      Advance(s, EncodeMove(0, 1));
      ASSERT_EQ(s.player.pos.x.raw(), start.x.raw() + n * sx) << "heading " << heading;
      ASSERT_EQ(s.player.pos.y.raw(), start.y.raw() - n * sy) << "heading " << heading;
    }
  }
}

TEST(CaveFlyerGame, GoalOutweighsAllTargets) {
  for (Difficulty d : {Difficulty::kEasy, Difficulty::kHard}) {
    const CaveFlyerParams& p = ParamSet::Default()->tables(d).caveflyer;
    EXPECT_GT(p.goal_reward, p.max_targets * p.target_reward);
  }
  for (uint32_t seed = 0; seed < 200; ++seed) {
    const GameState s = Fresh(GameId::kCaveFlyer, seed);
    const CaveFlyerParams& p = s.tables().caveflyer;
    int targets = 0;
    for (Item item : s.items.cells()) targets += item == Item::kTarget;
    EXPECT_EQ(targets, s.goal_total);
    EXPECT_EQ(GetGame(GameId::kCaveFlyer).LevelMaxReturn(s), targets * p.target_reward + p.goal_reward);
  }
}

TEST(CaveFlyerGame, LaserDestroysTargetForPartialReward) {
  for (uint32_t seed = 0; seed < 500; ++seed) {
    GameState s = Fresh(GameId::kCaveFlyer, seed);
    s.entities.clear();
    const Cell p = PlayerTile(s);
    // Heading 0 points east; a target two tiles east lies on the beam.
    if (!s.terrain.InBounds(p.x + 2, p.y) || s.terrain.at(p.x + 1, p.y) == Tile::kWall ||
        s.terrain.at(p.x + 2, p.y) == Tile::kWall || s.items.at(p.x + 1, p.y) != Item::kNone) {
      continue;
    }
    s.player.heading = 0;
    s.items.at(p.x + 2, p.y) = Item::kTarget;
    const int before = s.goal_remaining;
    double reward = 0;
    for (int t = 0; t < 4; ++t) reward += Advance(s, t == 0 ? 9 : kNoopAction).reward;
    EXPECT_EQ(reward, s.tables().caveflyer.target_reward);
    EXPECT_EQ(s.items.at(p.x + 2, p.y), Item::kNone);
    EXPECT_EQ(s.goal_remaining, before - 1);
    return;
  }
  FAIL() << "no spawn with a clear lane east";
}

}  // namespace
}  // namespace procarcade
