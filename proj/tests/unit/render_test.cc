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

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "procarcade/env.h"
#include "procarcade/game.h"
#include "procarcade/hash.h"
#include "procarcade/params.h"
#include "procarcade/render.h"
#include "test_util.h"

namespace procarcade {
namespace {

using testing::GoldenPath;

Observation Draw(const GameState& s) {
  Observation obs;
  RenderState(s, ObsView(obs));
  return obs;
}

TEST(Render, EmptyLevelWithSolidThemeIsBackground) {
  const Rgb bg{17, 99, 201};
  for (GameId g : kAllGames) {
    GameState s = GenerateLevel(g, Difficulty::kHard, false, 1);
    s.terrain.Fill(Tile::kOpen);
    s.items.Fill(Item::kNone);
    s.entities.clear();
    s.player.keys = 0;
    s.atlas = SolidTheme(bg);
    const Observation obs = Draw(s);
    for (int y = 0; y < kObsSize; ++y) {
      for (int x = 0; x < kObsSize; ++x) {
        ASSERT_EQ(PixelAt(obs, x, y), bg) << GameName(g) << " at " << x << "," << y;
      }
    }
  }
}

TEST(Render, PureAndOverwritesEveryPixel) {
  for (GameId g : kAllGames) {
    const GameState s = GenerateLevel(g, Difficulty::kHard, false, 8);
    Observation a;
    Observation b;
    a.fill(0x00);
    b.fill(0xAB);
    RenderState(s, ObsView(a));
    RenderState(s, ObsView(b));
    EXPECT_EQ(a, b) << GameName(g);
    EXPECT_EQ(Draw(s), a) << GameName(g);
  }
}

TEST(Theme, SameSeedSameAtlas) {
  for (GameId g : kAllGames) {
    for (uint32_t seed : {0u, 5u, 99999u}) {
      EXPECT_EQ(DeriveTheme(g, seed, 16), DeriveTheme(g, seed, 16));
      EXPECT_EQ(GenerateLevel(g, Difficulty::kHard, false, seed).atlas,
                GenerateLevel(g, Difficulty::kEasy, false, seed).atlas);
    }
  }
}

TEST(Theme, PoolsYieldDistinctPalettes) {
  const auto params = ParamSet::Default();
  for (GameId g : kAllGames) {
    const int pool = params->tables(Difficulty::kHard).Common(g).theme_pool;
    std::set<uint64_t> hashes;
    for (uint32_t seed = 0; seed < 100; ++seed) {
      hashes.insert(AtlasHash(GenerateLevel(g, Difficulty::kHard, false, seed).atlas));
    }
    EXPECT_GE(static_cast<int>(hashes.size()), std::min(pool, 8)) << GameName(g);
    EXPECT_LE(static_cast<int>(hashes.size()), pool) << GameName(g);
  }
}

TEST(Theme, GoalItemsKeepOneColor) {
  const SpriteAtlas reference = DeriveTheme(GameId::kMaze, 0, 16);
  for (GameId g : kAllGames) {
    for (uint32_t seed = 0; seed < 100; ++seed) {
      const SpriteAtlas atlas = DeriveTheme(g, seed, 16);
      for (Item item : {Item::kCoin, Item::kCheese, Item::kGem}) {
        EXPECT_EQ(atlas.items[static_cast<int>(item)], reference.items[static_cast<int>(item)]);
      }
    }
  }
}

// Tile offset from the view's left edge of pixel p's center, for a span-tile view.
int TileOffset(int p, int span) { return (2 * p + 1) * span * 2 / Fixed::kOne; }

TEST(Render, MemoryModeMasksOutsideThePatch) {
  for (GameId g : kAllGames) {
    if (!SupportsMemoryMode(g) || GetGame(g).camera_mode() != CameraMode::kFullView) continue;
    for (uint32_t seed = 0; seed < 20; ++seed) {
      const GameState s = GenerateLevel(g, Difficulty::kHard, true, seed);
      const Observation obs = Draw(s);
      int inside_unmasked = 0;
      for (int y = 0; y < kObsSize; ++y) {
        for (int x = 0; x < kObsSize; ++x) {
          const int dx = TileOffset(x, kMemoryViewTiles) - kMemoryViewTiles / 2;
          const int dy = TileOffset(y, kMemoryViewTiles) - kMemoryViewTiles / 2;
          const bool outside = std::abs(dx) > kMemoryPatchTiles / 2 || std::abs(dy) > kMemoryPatchTiles / 2;
          if (outside) {
            ASSERT_EQ(PixelAt(obs, x, y), kMaskColor) << GameName(g) << " " << x << "," << y;
          } else {
            inside_unmasked += !(PixelAt(obs, x, y) == kMaskColor);
          }
        }
      }
      EXPECT_GT(inside_unmasked, 0) << GameName(g);
    }
  }
}

TEST(Render, MemoryModeEnlargesWorlds) {
  const GameTables& t = ParamSet::Default()->tables(Difficulty::kHard);
  for (uint32_t seed = 0; seed < 50; ++seed) {
    const auto make = [seed](GameId g, bool memory) { return GenerateLevel(g, Difficulty::kHard, memory, seed); };
    EXPECT_EQ(make(GameId::kMaze, true).terrain.width(), 2 * t.maze.memory_cells + 1);
    EXPECT_GE(t.maze.memory_cells, t.maze.max_cells);
    EXPECT_EQ(make(GameId::kHeist, true).terrain.width(), 2 * t.heist.memory_cells + 1);
    EXPECT_GT(t.heist.memory_cells, t.heist.max_cells);
    EXPECT_EQ(make(GameId::kMiner, true).terrain.width(), t.miner.memory_width);
    EXPECT_GT(make(GameId::kMiner, true).terrain.size(), make(GameId::kMiner, false).terrain.size());
    EXPECT_GT(make(GameId::kCaveFlyer, true).terrain.size(), make(GameId::kCaveFlyer, false).terrain.size());
    EXPECT_GE(make(GameId::kCoinRun, true).terrain.width(), make(GameId::kCoinRun, false).terrain.width());
  }
}

TEST(Render, HeistShowsHeldKeysTopRight) {
  GameState s = GenerateLevel(GameId::kHeist, Difficulty::kHard, false, 2);
  const Rgb red = s.atlas.items[static_cast<int>(Item::kKeyRed)];
  s.player.keys = 0;
  const Observation none = Draw(s);
  s.player.keys = 1;
  const Observation held = Draw(s);
  EXPECT_NE(none, held);
  EXPECT_EQ(PixelAt(held, kObsSize - 4, 2), red);
}

// Golden frames for the first frame of 20 (game, seed) pairs. Regenerate
// with PROCARCADE_UPDATE_GOLDENS=1 after an intentional visual change.
TEST(Render, GoldenFirstFrames) {
  std::vector<std::pair<std::string, uint32_t>> cases;
  for (GameId g : kAllGames) {
    cases.push_back({std::string(GameName(g)), 1});
    cases.push_back({std::string(GameName(g)), 2024});
  }
  cases.push_back({"maze", 7});
  cases.push_back({"coinrun", 7});
  std::ostringstream current;
  for (const auto& [name, seed] : cases) {
    const GameState s = GenerateLevel(*ParseGameId(name), Difficulty::kHard, false, seed);
    const Observation obs = Draw(s);
    char hex[19];
    std::snprintf(hex, sizeof hex, "0x%016llx", static_cast<unsigned long long>(Fnv1a(obs)));
    current << name << " " << seed << " " << hex << "\n";
  }
  const std::string path = GoldenPath("render_hashes.txt");
  if (std::getenv("PROCARCADE_UPDATE_GOLDENS")) {
    std::ofstream(path) << current.str();
    GTEST_SKIP() << "goldens rewritten";
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing " << path;
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(current.str(), want.str());
}

}  // namespace
}  // namespace procarcade
