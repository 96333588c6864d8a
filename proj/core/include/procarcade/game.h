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
#ifndef PROCARCADE_GAME_H_
#define PROCARCADE_GAME_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "procarcade/action.h"
#include "procarcade/levelgen.h"
#include "procarcade/state.h"

namespace procarcade {

// Everything a generator may depend on. Streams are keyed on the level seed
// and the retry attempt only, so a level is reproducible from its seed.
struct GenContext {
  uint32_t level_seed = 0;
  uint32_t attempt = 0;
  Difficulty difficulty = Difficulty::kHard;
  bool memory_mode = false;
  std::shared_ptr<const ParamSet> params;

  RngStream Stream(std::string_view label) const {
    return DeriveStream(attempt, level_seed, label);
  }
  const GameTables& tables() const { return params->tables(difficulty); }
};

enum class CameraMode : uint8_t { kFullView, kScrolling, kAgentCentered };

// Square window onto the world, in tile units.
struct View {
  Fixed left;
  Fixed top;
  int span = 1;
  // Memory mode: everything beyond the 7x7 patch around the agent is masked.
  bool patch_mask = false;
  Cell patch_center;
};

inline constexpr int kMemoryViewTiles = 9;
inline constexpr int kMemoryPatchTiles = 7;

struct LevelStat {
  std::string name;
  double value = 0;
};

// Stream labels used by level generation; listed for collision checks.
inline constexpr std::string_view kStreamLabels[] = {
    "layout", "theme", "placement", "enemies", "tick", "spawn", "lanes",
    "locks", "size", "episode", "policy",
};

class Game {
 public:
  virtual ~Game() = default;

  virtual GameId id() const = 0;
  virtual CameraMode camera_mode() const = 0;
  // Fills a fresh state. Throws ErrorKind::kGeneration to request a resample.
  virtual void Generate(const GenContext& ctx, GameState& state) const = 0;
  // Advances one tick. Player motion first, then world dynamics.
  virtual TickOutcome Tick(GameState& state, Intent intent) const = 0;
  // Search-based solvability oracle over an abstracted state.
  virtual SolveResult Solve(const GameState& fresh) const = 0;
  virtual View Camera(const GameState& state) const;
  virtual std::vector<LevelStat> Stats(const GameState& fresh) const;
  // Largest achievable return on this level, when cheaply known.
  virtual double LevelMaxReturn(const GameState& fresh) const = 0;
};

const Game& GetGame(GameId game);

inline constexpr int kMaxGenerationAttempts = 50;

// Generates the level for a seed, resampling on generation errors with the
// attempt counter. Throws ErrorKind::kGeneration after 50 failures.
GameState GenerateLevel(GameId game, Difficulty difficulty, bool memory_mode,
                        uint32_t level_seed,
                        std::shared_ptr<const ParamSet> params = nullptr);

SolveResult SolvabilityCheck(const GameState& fresh);

// Full-world view centered in a square window.
View FullView(const GameState& state);

}  // namespace procarcade

#endif  // PROCARCADE_GAME_H_
