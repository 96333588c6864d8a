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
#include "procarcade/game.h"

#include <algorithm>
#include <string>

#include "games/games.h"
#include "procarcade/error.h"
#include "procarcade/theme.h"

namespace procarcade {

View Game::Camera(const GameState& state) const { return FullView(state); }

std::vector<LevelStat> Game::Stats(const GameState& fresh) const {
  return {{"width", static_cast<double>(fresh.terrain.width())},
          {"height", static_cast<double>(fresh.terrain.height())}};
}

const Game& GetGame(GameId game) {
  switch (game) {
    case GameId::kBigFish: return games::BigFish();
    case GameId::kCaveFlyer: return games::CaveFlyer();
    case GameId::kChaser: return games::Chaser();
    case GameId::kCoinRun: return games::CoinRun();
    case GameId::kHeist: return games::Heist();
    case GameId::kLeaper: return games::Leaper();
    case GameId::kMaze: return games::Maze();
    case GameId::kMiner: return games::Miner();
    case GameId::kNinja: return games::Ninja();
  }
  Fail(ErrorKind::kDomain, "unknown game id");
}

GameState GenerateLevel(GameId game_id, Difficulty difficulty, bool memory_mode,
                        uint32_t level_seed,
                        std::shared_ptr<const ParamSet> params) {
  if (!params) params = ParamSet::Default();
  const Game& game = GetGame(game_id);
  const GameTables& tables = params->tables(difficulty);
  for (uint32_t attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    GenContext ctx{level_seed, attempt, difficulty, memory_mode, params};
    GameState state;
    state.game = game_id;
    state.difficulty = difficulty;
    state.memory_mode = memory_mode;
    state.level_seed = level_seed;
    state.generation_attempt = attempt;
    state.params = params;
    state.tick_rng = ctx.Stream("tick");
    state.atlas = DeriveTheme(game_id, level_seed, tables.Common(game_id).theme_pool);
    try {
      game.Generate(ctx, state);
      return state;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kGeneration) throw;
    }
  }
  Fail(ErrorKind::kGeneration,
       std::string(GameName(game_id)) + " level " + std::to_string(level_seed) +
           " failed generation " + std::to_string(kMaxGenerationAttempts) +
           " times");
}

SolveResult SolvabilityCheck(const GameState& fresh) {
  return GetGame(fresh.game).Solve(fresh);
}

View FullView(const GameState& state) {
  const int w = state.terrain.width();
  const int h = state.terrain.height();
  View view;
  view.span = std::max(w, h);
  // Half-tile offsets center the short axis.
  view.left = Fixed::FromRaw((w - view.span) * Fixed::kOne / 2);
  view.top = Fixed::FromRaw((h - view.span) * Fixed::kOne / 2);
  return view;
}

}  // namespace procarcade
