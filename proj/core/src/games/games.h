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
#ifndef PROCARCADE_GAMES_GAMES_H_
#define PROCARCADE_GAMES_GAMES_H_

#include <optional>
#include <vector>

#include "procarcade/game.h"

namespace procarcade::games {

const Game& BigFish();
const Game& CaveFlyer();
const Game& Chaser();
const Game& CoinRun();
const Game& Heist();
const Game& Leaper();
const Game& Maze();
const Game& Miner();
const Game& Ninja();

// Shared helpers for grid-locked games.

inline Fixed TileFixed(int v) { return Fixed::FromInt(v); }

inline void PlacePlayer(GameState& state, Cell c) {
  state.player.pos = {TileFixed(c.x), TileFixed(c.y)};
}

inline Cell PlayerCell(const GameState& state) {
  return {state.player.TileX(), state.player.TileY()};
}

// Uniform pick among cells satisfying pred, or nullopt.
template <typename Pred>
std::optional<Cell> PickCell(RngStream& rng, int width, int height, Pred pred) {
  std::vector<Cell> cells;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (pred(x, y)) cells.push_back({x, y});
    }
  }
  if (cells.empty()) return std::nullopt;
  return cells[rng.NextUint(static_cast<uint32_t>(cells.size()))];
}

// Four-way move for maze-like games; diagonals and specials are no-ops.
inline Cell GridMove(Intent intent) {
  if (intent.dx != 0 && intent.dy != 0) return {0, 0};
  return {intent.dx, -intent.dy};
}

// Action indices that walk a 4-connected tile path.
inline std::vector<int> ActionsForPath(const std::vector<Cell>& path) {
  std::vector<int> actions;
  for (size_t i = 1; i < path.size(); ++i) {
    actions.push_back(EncodeMove(path[i].x - path[i - 1].x, path[i - 1].y - path[i].y));
  }
  return actions;
}

// Square view of span tiles whose center is the player's center.
inline View AgentView(const GameState& state, int span) {
  View view;
  view.span = span;
  const int32_t half = span * Fixed::kOne / 2;
  view.left = Fixed::FromRaw(state.player.pos.x.raw() + state.player.w.raw() / 2 - half);
  view.top = Fixed::FromRaw(state.player.pos.y.raw() + state.player.h.raw() / 2 - half);
  return view;
}

// Memory-mode view: 9x9 tiles around the player tile, masked to 7x7.
inline View MemoryView(const GameState& state) {
  View view;
  view.span = kMemoryViewTiles;
  view.left = Fixed::FromInt(state.player.TileX() - kMemoryViewTiles / 2);
  view.top = Fixed::FromInt(state.player.TileY() - kMemoryViewTiles / 2);
  view.patch_mask = true;
  view.patch_center = PlayerCell(state);
  return view;
}

}  // namespace procarcade::games

#endif  // PROCARCADE_GAMES_GAMES_H_
