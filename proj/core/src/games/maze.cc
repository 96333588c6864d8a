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
#include "games/games.h"

namespace procarcade::games {
namespace {

class MazeGame final : public Game {
 public:
  GameId id() const override { return GameId::kMaze; }
  CameraMode camera_mode() const override { return CameraMode::kFullView; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const MazeParams& p = ctx.tables().maze;
    int w = p.memory_cells;
    int h = p.memory_cells;
    if (!ctx.memory_mode) {
      RngStream size = ctx.Stream("size");
      w = size.Range(p.min_cells, p.max_cells);
      h = size.Range(p.min_cells, p.max_cells);
    }
    RngStream layout = ctx.Stream("layout");
    state.terrain = KruskalMaze(layout, w, h);
    state.items = Grid<Item>(state.terrain.width(), state.terrain.height());

    RngStream place = ctx.Stream("placement");
    const auto open = [&](int x, int y) { return state.terrain.at(x, y) != Tile::kWall; };
    const auto mouse = PickCell(place, state.terrain.width(), state.terrain.height(), open);
    if (!mouse) Fail(ErrorKind::kGeneration, "maze has no open cell");
    PlacePlayer(state, *mouse);
    const auto cheese = PickCell(place, state.terrain.width(), state.terrain.height(),
                                 [&](int x, int y) { return open(x, y) && !(Cell{x, y} == *mouse); });
    if (!cheese) Fail(ErrorKind::kGeneration, "maze has a single open cell");
    state.items.at(cheese->x, cheese->y) = Item::kCheese;
    state.goal_total = state.goal_remaining = 1;
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    TickOutcome out;
    const Cell d = GridMove(intent);
    const Cell at = PlayerCell(state);
    const Cell to{at.x + d.x, at.y + d.y};
    if (state.terrain.Get(to.x, to.y, Tile::kWall) != Tile::kWall) PlacePlayer(state, to);
    Item& item = state.items.at(state.player.TileX(), state.player.TileY());
    if (item == Item::kCheese) {
      item = Item::kNone;
      state.goal_remaining = 0;
      out.reward = state.tables().maze.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  SolveResult Solve(const GameState& fresh) const override {
    SolveResult result;
    Cell cheese{-1, -1};
    for (int y = 0; y < fresh.items.height(); ++y) {
      for (int x = 0; x < fresh.items.width(); ++x) {
        if (fresh.items.at(x, y) == Item::kCheese) cheese = {x, y};
      }
    }
    const auto path = ShortestPath(fresh.terrain, PlayerCell(fresh), cheese);
    result.expanded = CountOpen(fresh.terrain);
    if (!path) {
      result.verdict = Verdict::kUnsolvable;
      return result;
    }
    result.verdict = Verdict::kSolvable;
    result.witness_path = *path;
    result.witness_actions = ActionsForPath(*path);
    return result;
  }

  View Camera(const GameState& state) const override {
    return state.memory_mode ? MemoryView(state) : FullView(state);
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    return {{"maze_width_cells", static_cast<double>(fresh.terrain.width() / 2)},
            {"maze_height_cells", static_cast<double>(fresh.terrain.height() / 2)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    return fresh.tables().maze.completion_reward;
  }
};

}  // namespace

const Game& Maze() {
  static const MazeGame game;
  return game;
}

}  // namespace procarcade::games
