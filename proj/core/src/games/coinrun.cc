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
#include "games/platform_world.h"

namespace procarcade::games {
namespace {

PlatformWorld WorldOf(const GameState& s) {
  PlatformWorld world;
  world.layout = &s.terrain;
  world.items = &s.items;
  world.model = s.tables().coinrun.platforms.jump;
  world.goal_item = Item::kCoin;
  for (const Entity& e : s.entities) {
    if (e.kind == EntityKind::kEnemy) world.pacers.push_back({e.a, e.pos.y.Floor(), e.b});
  }
  return world;
}

class CoinRunGame final : public Game {
 public:
  GameId id() const override { return GameId::kCoinRun; }
  CameraMode camera_mode() const override { return CameraMode::kScrolling; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const CoinRunParams& p = ctx.tables().coinrun;
    PlatformParams params = p.platforms;
    if (ctx.memory_mode) {
      params.min_sections = params.max_sections = p.memory_sections;
    }
    RngStream layout = ctx.Stream("layout");
    PlatformLevel level = PlatformSequence(layout, params);
    state.terrain = std::move(level.layout);
    state.items = Grid<Item>(state.terrain.width(), state.terrain.height());
    for (const PlacementSpec& spec : level.placements) {
      switch (spec.kind) {
        case PlacementKind::kGoal:
          state.items.at(spec.cell.x, spec.cell.y) = Item::kCoin;
          break;
        case PlacementKind::kSaw:
          state.items.at(spec.cell.x, spec.cell.y) = Item::kSaw;
          break;
        case PlacementKind::kCrate:
          state.items.at(spec.cell.x, spec.cell.y) = Item::kCrate;
          break;
        case PlacementKind::kEnemy: {
          Entity e;
          e.kind = EntityKind::kEnemy;
          e.a = spec.cell.x;
          e.b = spec.patrol_width;
          e.pos = {TileFixed(spec.cell.x), TileFixed(spec.cell.y)};
          state.entities.push_back(e);
          break;
        }
        case PlacementKind::kBomb:
          break;
      }
    }
    PlacePlayer(state, level.spawn);
    state.goal_total = state.goal_remaining = 1;
    if (Solve(state).verdict != Verdict::kSolvable) {
      Fail(ErrorKind::kGeneration, "coinrun level has no route to the coin");
    }
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    TickOutcome out;
    const PlatformWorld world = WorldOf(state);
    Body body = BodyOf(state);
    const PlatformStep s = world.Step(body, state.level_step, intent.dx, intent.dy > 0);
    StoreBody(state, body);
    if (intent.dx != 0) state.player.facing = intent.dx;
    for (Entity& e : state.entities) {
      if (e.kind != EntityKind::kEnemy) continue;
      const Pacer pacer{e.a, e.pos.y.Floor(), e.b};
      e.pos.x = TileFixed(pacer.X(state.level_step + 1));
    }
    if (s.dead) {
      state.player.alive = false;
      out.failed = true;
    } else if (s.complete) {
      state.items.at(state.player.TileX(), state.player.TileY()) = Item::kNone;
      state.goal_remaining = 0;
      out.reward = state.tables().coinrun.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  SolveResult Solve(const GameState& fresh) const override {
    Cell goal{0, 0};
    for (int y = 0; y < fresh.items.height(); ++y) {
      for (int x = 0; x < fresh.items.width(); ++x) {
        if (fresh.items.at(x, y) == Item::kCoin) goal = {x, y};
      }
    }
    return SolvePlatformWorld(WorldOf(fresh), BodyOf(fresh), fresh.level_step, goal);
  }

  View Camera(const GameState& state) const override {
    return ScrollingView(state, state.tables().coinrun.view_tiles);
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    int saws = 0;
    for (Item item : fresh.items.cells()) saws += item == Item::kSaw;
    // Regenerating the layout stream recovers the section count.
    const CoinRunParams& p = fresh.tables().coinrun;
    PlatformParams params = p.platforms;
    if (fresh.memory_mode) params.min_sections = params.max_sections = p.memory_sections;
    RngStream layout = DeriveStream(fresh.generation_attempt, fresh.level_seed, "layout");
    const int sections = PlatformSequence(layout, params).sections;
    return {{"sections", static_cast<double>(sections)},
            {"level_width", static_cast<double>(fresh.terrain.width())},
            {"saws", static_cast<double>(saws)},
            {"enemies", static_cast<double>(fresh.entities.size())}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    return fresh.tables().coinrun.completion_reward;
  }
};

}  // namespace

const Game& CoinRun() {
  static const CoinRunGame game;
  return game;
}

}  // namespace procarcade::games
