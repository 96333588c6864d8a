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
#include "procarcade/types.h"

#include <string>

#include "procarcade/error.h"
#include "procarcade/params.h"

namespace procarcade {

std::string_view GameName(GameId game) {
  switch (game) {
    case GameId::kBigFish: return "bigfish";
    case GameId::kCaveFlyer: return "caveflyer";
    case GameId::kChaser: return "chaser";
    case GameId::kCoinRun: return "coinrun";
    case GameId::kHeist: return "heist";
    case GameId::kLeaper: return "leaper";
    case GameId::kMaze: return "maze";
    case GameId::kMiner: return "miner";
    case GameId::kNinja: return "ninja";
  }
  return "unknown";
}

std::optional<GameId> ParseGameId(std::string_view name) {
  for (GameId g : kAllGames) {
    if (GameName(g) == name) return g;
  }
  return std::nullopt;
}

std::string_view DifficultyName(Difficulty difficulty) {
  return difficulty == Difficulty::kEasy ? "easy" : "hard";
}

std::optional<Difficulty> ParseDifficulty(std::string_view name) {
  if (name == "easy") return Difficulty::kEasy;
  if (name == "hard") return Difficulty::kHard;
  return std::nullopt;
}

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kStandard: return "standard";
    case Mode::kSequential: return "sequential";
    case Mode::kExploration: return "exploration";
    case Mode::kMemory: return "memory";
  }
  return "standard";
}

std::optional<Mode> ParseMode(std::string_view name) {
  for (Mode m : {Mode::kStandard, Mode::kSequential, Mode::kExploration,
                 Mode::kMemory}) {
    if (ModeName(m) == name) return m;
  }
  return std::nullopt;
}

bool SupportsMemoryMode(GameId game) {
  switch (game) {
    case GameId::kMaze:
    case GameId::kHeist:
    case GameId::kMiner:
    case GameId::kCaveFlyer:
    case GameId::kCoinRun:
      return true;
    default:
      return false;
  }
}

bool SupportsExplorationMode(GameId game) {
  switch (game) {
    case GameId::kCoinRun:
    case GameId::kCaveFlyer:
    case GameId::kLeaper:
    case GameId::kMaze:
    case GameId::kHeist:
    case GameId::kNinja:
      return true;
    default:
      return false;
  }
}

EnvConfig NormalizeConfig(EnvConfig config) {
  if (!config.params) config.params = ParamSet::Default();
  if (config.max_episode_steps < 1) {
    Fail(ErrorKind::kConfig, "max_episode_steps must be >= 1");
  }
  const std::string game(GameName(config.game));
  switch (config.mode) {
    case Mode::kMemory:
      if (!SupportsMemoryMode(config.game)) {
        Fail(ErrorKind::kConfig, "memory mode is not supported by " + game);
      }
      break;
    case Mode::kExploration:
      if (!SupportsExplorationMode(config.game)) {
        Fail(ErrorKind::kConfig, "exploration mode is not supported by " + game);
      }
      config.difficulty = Difficulty::kHard;
      config.num_levels = 1;
      config.start_level =
          config.params->tables(Difficulty::kHard).Common(config.game).exploration_seed;
      break;
    case Mode::kStandard:
    case Mode::kSequential:
      break;
  }
  return config;
}

}  // namespace procarcade
