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

constexpr int kStarLifetime = 10;
constexpr int kStarSpeed = 2;  // tiles per tick

// Throw directions for actions 9..12: straight, rising, falling, upward.
constexpr Cell kThrows[4] = {{1, 0}, {1, -1}, {1, 1}, {0, -1}};

PlatformWorld WorldOf(const GameState& s) {
  PlatformWorld world;
  world.layout = &s.terrain;
  world.items = &s.items;
  world.model = s.tables().ninja.platforms.jump;
  world.goal_item = Item::kMushroom;
  return world;
}

class NinjaGame final : public Game {
 public:
  GameId id() const override { return GameId::kNinja; }
  CameraMode camera_mode() const override { return CameraMode::kScrolling; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const NinjaParams& p = ctx.tables().ninja;
    RngStream layout = ctx.Stream("layout");
    PlatformLevel level = PlatformSequence(layout, p.platforms);
    state.terrain = std::move(level.layout);
    state.items = Grid<Item>(state.terrain.width(), state.terrain.height());
    for (const PlacementSpec& spec : level.placements) {
      if (spec.kind == PlacementKind::kGoal) state.items.at(spec.cell.x, spec.cell.y) = Item::kMushroom;
      if (spec.kind == PlacementKind::kBomb) state.items.at(spec.cell.x, spec.cell.y) = Item::kBomb;
    }
    PlacePlayer(state, level.spawn);
    state.goal_total = state.goal_remaining = 1;
    if (Solve(state).verdict != Verdict::kSolvable) {
      Fail(ErrorKind::kGeneration, "ninja level has no route to the mushroom");
    }
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    const NinjaParams& p = state.tables().ninja;
    TickOutcome out;
    if (intent.dx != 0) state.player.facing = intent.dx;
    if (intent.special >= 1 && intent.special <= 4 && state.player.cooldown == 0) {
      const Cell dir = kThrows[intent.special - 1];
      Entity star;
      star.kind = EntityKind::kThrownStar;
      star.pos = state.player.pos;
      star.a = dir.x * state.player.facing;
      star.b = dir.y;
      star.timer = kStarLifetime;
      state.entities.push_back(star);
      state.player.cooldown = p.star_cooldown;
    } else if (state.player.cooldown > 0) {
      --state.player.cooldown;
    }
    MoveStars(state);

    const PlatformWorld world = WorldOf(state);
    Body body = BodyOf(state);
    const PlatformStep s = world.Step(body, state.level_step, intent.dx, intent.dy > 0);
    StoreBody(state, body);
    if (s.dead) {
      state.player.alive = false;
      out.failed = true;
    } else if (s.complete) {
      state.items.at(state.player.TileX(), state.player.TileY()) = Item::kNone;
      state.goal_remaining = 0;
      out.reward = p.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  // Bombs are treated as impassable; stars are never needed by the oracle.
  SolveResult Solve(const GameState& fresh) const override {
    Cell goal{0, 0};
    for (int y = 0; y < fresh.items.height(); ++y) {
      for (int x = 0; x < fresh.items.width(); ++x) {
        if (fresh.items.at(x, y) == Item::kMushroom) goal = {x, y};
      }
    }
    return SolvePlatformWorld(WorldOf(fresh), BodyOf(fresh), fresh.level_step, goal);
  }

  View Camera(const GameState& state) const override {
    return ScrollingView(state, state.tables().ninja.view_tiles);
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    RngStream layout = DeriveStream(fresh.generation_attempt, fresh.level_seed, "layout");
    const PlatformLevel level = PlatformSequence(layout, fresh.tables().ninja.platforms);
    int decoys = 0;
    for (const Platform& plat : level.platforms) decoys += !plat.critical;
    int bombs = 0;
    for (Item item : fresh.items.cells()) bombs += item == Item::kBomb;
    return {{"sections", static_cast<double>(level.sections)},
            {"decoys", static_cast<double>(decoys)},
            {"bombs", static_cast<double>(bombs)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    return fresh.tables().ninja.completion_reward;
  }

 private:
  static void MoveStars(GameState& state) {
    for (Entity& e : state.entities) {
      if (e.kind != EntityKind::kThrownStar || !e.alive) continue;
      for (int i = 0; i < kStarSpeed && e.alive; ++i) {
        const int nx = e.pos.x.Floor() + e.a;
        const int ny = e.pos.y.Floor() + e.b;
        if (!state.terrain.InBounds(nx, ny) || IsSolid(state.terrain.at(nx, ny))) {
          e.alive = false;
          break;
        }
        e.pos = {TileFixed(nx), TileFixed(ny)};
        if (state.items.at(nx, ny) == Item::kBomb) {
          state.items.at(nx, ny) = Item::kNone;
          e.alive = false;
        }
      }
      if (--e.timer <= 0) e.alive = false;
    }
    std::erase_if(state.entities, [](const Entity& e) { return !e.alive; });
  }
};

}  // namespace

const Game& Ninja() {
  static const NinjaGame game;
  return game;
}

}  // namespace procarcade::games
