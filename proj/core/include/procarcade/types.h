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
#ifndef PROCARCADE_TYPES_H_
#define PROCARCADE_TYPES_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace procarcade {

enum class GameId : uint8_t {
  kBigFish,
  kCaveFlyer,
  kChaser,
  kCoinRun,
  kHeist,
  kLeaper,
  kMaze,
  kMiner,
  kNinja,
};

inline constexpr std::array<GameId, 9> kAllGames = {
    GameId::kBigFish, GameId::kCaveFlyer, GameId::kChaser,
    GameId::kCoinRun, GameId::kHeist,     GameId::kLeaper,
    GameId::kMaze,    GameId::kMiner,     GameId::kNinja,
};

std::string_view GameName(GameId game);
std::optional<GameId> ParseGameId(std::string_view name);

enum class Difficulty : uint8_t { kEasy, kHard };

std::string_view DifficultyName(Difficulty difficulty);
std::optional<Difficulty> ParseDifficulty(std::string_view name);

enum class Mode : uint8_t { kStandard, kSequential, kExploration, kMemory };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

class ParamSet;

inline constexpr int32_t kDefaultMaxEpisodeSteps = 1000;

// Everything that determines the level distribution of an environment.
struct EnvConfig {
  GameId game = GameId::kCoinRun;
  Difficulty difficulty = Difficulty::kHard;
  uint32_t num_levels = 0;  // 0 = unbounded distribution
  uint32_t start_level = 0;
  uint32_t rand_seed = 0;
  Mode mode = Mode::kStandard;
  int32_t max_episode_steps = kDefaultMaxEpisodeSteps;
  // Null selects the built-in tables.
  std::shared_ptr<const ParamSet> params;
};

// Checks the config and applies mode-implied settings (exploration pins the
// handpicked seed and hard difficulty). Throws ErrorKind::kConfig.
EnvConfig NormalizeConfig(EnvConfig config);

bool SupportsMemoryMode(GameId game);
bool SupportsExplorationMode(GameId game);

}  // namespace procarcade

#endif  // PROCARCADE_TYPES_H_
