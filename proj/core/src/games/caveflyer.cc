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
#include <algorithm>
#include <deque>

#include "games/games.h"

namespace procarcade::games {
namespace {

constexpr int32_t kShipRaw = 192;    // 0.75 tiles
constexpr int32_t kInsetRaw = 32;    // centers a ship inside its tile
constexpr int kHeadingQuarter = 64;

struct Box {
  int32_t x;
  int32_t y;
  int32_t w;
  int32_t h;
};

bool Overlap(const Box& a, const Box& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

Box BoxOf(FixedVec pos, Fixed w, Fixed h) { return {pos.x.raw(), pos.y.raw(), w.raw(), h.raw()}; }

// True when the box touches a wall tile, a stationary obstacle, or leaves the map.
bool HitsTerrain(const GameState& s, const Box& b, bool obstacles) {
  const int x0 = b.x >> Fixed::kFracBits;
  const int x1 = (b.x + b.w - 1) >> Fixed::kFracBits;
  const int y0 = b.y >> Fixed::kFracBits;
  const int y1 = (b.y + b.h - 1) >> Fixed::kFracBits;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (s.terrain.Get(x, y, Tile::kWall) == Tile::kWall) return true;
      if (obstacles && s.items.at(x, y) == Item::kObstacle) return true;
    }
  }
  return false;
}

FixedVec Centered(Cell c) {
  return {Fixed::FromRaw(c.x * Fixed::kOne + kInsetRaw), Fixed::FromRaw(c.y * Fixed::kOne + kInsetRaw)};
}

// Cells a moving obstacle can ever occupy: its open run along its axis.
void MarkSweep(const GameState& s, const Entity& e, Grid<uint8_t>& blocked) {
  const Cell c{e.pos.x.Floor(), e.pos.y.Floor()};
  const Cell d = e.vel.x.raw() != 0 ? Cell{1, 0} : Cell{0, 1};
  for (int sign : {1, -1}) {
    Cell at = c;
    while (s.terrain.Get(at.x, at.y, Tile::kWall) != Tile::kWall) {
      blocked.at(at.x, at.y) = 1;
      at = {at.x + sign * d.x, at.y + sign * d.y};
    }
  }
}

int HeadingFor(Cell step) {
  if (step.x > 0) return 0;
  if (step.y < 0) return kHeadingQuarter;
  if (step.x < 0) return 2 * kHeadingQuarter;
  return 3 * kHeadingQuarter;
}

class CaveFlyerGame final : public Game {
 public:
  GameId id() const override { return GameId::kCaveFlyer; }
  CameraMode camera_mode() const override { return CameraMode::kAgentCentered; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const CaveFlyerParams& p = ctx.tables().caveflyer;
    const int w = ctx.memory_mode ? p.memory_size : p.width;
    const int h = ctx.memory_mode ? p.memory_size : p.height;
    RngStream layout = ctx.Stream("layout");
    state.terrain = CellularAutomataCave(layout, w, h, p.cave);
    state.items = Grid<Item>(w, h);

    RngStream place = ctx.Stream("placement");
    const auto open = [&](int x, int y) { return state.terrain.at(x, y) != Tile::kWall; };
    const Cell start = *PickCell(place, w, h, open);
    state.player.pos = Centered(start);
    state.player.w = state.player.h = Fixed::FromRaw(kShipRaw);
    state.player.heading = static_cast<uint8_t>(kHeadingQuarter * place.Range(0, 3));

    // The goal sits in the far half of the cave by path distance.
    const Grid<int32_t> dist = BfsDistances(state.terrain, start);
    const int32_t far = *std::max_element(dist.cells().begin(), dist.cells().end());
    const Cell goal = *PickCell(place, w, h, [&](int x, int y) { return dist.at(x, y) * 2 >= far; });
    state.items.at(goal.x, goal.y) = Item::kGoalShip;

    const auto free_cell = [&](int x, int y) {
      return open(x, y) && state.items.at(x, y) == Item::kNone && dist.at(x, y) > 2;
    };
    RngStream enemies = ctx.Stream("enemies");
    const int targets = enemies.Range(p.min_targets, p.max_targets);
    for (int i = 0; i < targets; ++i) {
      const auto c = PickCell(enemies, w, h, free_cell);
      if (!c) Fail(ErrorKind::kGeneration, "cave too small for targets");
      state.items.at(c->x, c->y) = Item::kTarget;
    }
    for (int i = 0; i < p.obstacles; ++i) {
      const auto c = PickCell(enemies, w, h, free_cell);
      if (!c) Fail(ErrorKind::kGeneration, "cave too small for obstacles");
      state.items.at(c->x, c->y) = Item::kObstacle;
    }
    for (int i = 0; i < p.moving_obstacles; ++i) {
      const auto c = PickCell(enemies, w, h, free_cell);
      if (!c) Fail(ErrorKind::kGeneration, "cave too small for moving obstacles");
      Entity e;
      e.kind = EntityKind::kMovingObstacle;
      e.pos = Centered(*c);
      e.w = e.h = Fixed::FromRaw(kShipRaw);
      const Fixed speed = enemies.Chance(500) ? p.obstacle_speed : -p.obstacle_speed;
      if (enemies.Chance(500)) {
        e.vel = {speed, Fixed()};
      } else {
        e.vel = {Fixed(), speed};
      }
      state.entities.push_back(e);
    }
    state.goal_total = state.goal_remaining = targets;
    if (Solve(state).verdict != Verdict::kSolvable) {
      Fail(ErrorKind::kGeneration, "cave obstacles cut the route to the goal");
    }
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    const CaveFlyerParams& p = state.tables().caveflyer;
    TickOutcome out;
    PlayerState& ship = state.player;
    // Left turns counter-clockwise; heading 0 points east, 64 north.
    ship.heading = static_cast<uint8_t>(ship.heading - intent.dx * p.rotate_step);
    if (intent.dy != 0) {
      const Fixed step = intent.dy > 0 ? p.speed : -p.speed;
      ship.pos.x += FixedMul(step, Cos256(ship.heading));
      ship.pos.y -= FixedMul(step, Sin256(ship.heading));
    }
    if (intent.special == 1 && ship.cooldown == 0) {
      Entity laser;
      laser.kind = EntityKind::kLaser;
      laser.w = laser.h = Fixed::FromRaw(64);
      laser.pos = {ship.pos.x + Fixed::FromRaw((kShipRaw - 64) / 2),
                   ship.pos.y + Fixed::FromRaw((kShipRaw - 64) / 2)};
      laser.vel = {FixedMul(p.laser_speed, Cos256(ship.heading)),
                   -FixedMul(p.laser_speed, Sin256(ship.heading))};
      laser.timer = p.laser_ticks;
      state.entities.push_back(laser);
      ship.cooldown = p.fire_cooldown;
    } else if (ship.cooldown > 0) {
      --ship.cooldown;
    }

    for (Entity& e : state.entities) {
      if (e.kind == EntityKind::kMovingObstacle) {
        const FixedVec next{e.pos.x + e.vel.x, e.pos.y + e.vel.y};
        if (HitsTerrain(state, BoxOf(next, e.w, e.h), false)) {
          e.vel = {-e.vel.x, -e.vel.y};
        } else {
          e.pos = next;
        }
      } else if (e.kind == EntityKind::kLaser) {
        e.pos = {e.pos.x + e.vel.x, e.pos.y + e.vel.y};
        const int cx = (e.pos.x.raw() + 32) >> Fixed::kFracBits;
        const int cy = (e.pos.y.raw() + 32) >> Fixed::kFracBits;
        const Tile tile = state.terrain.Get(cx, cy, Tile::kWall);
        const Item item = tile == Tile::kWall ? Item::kNone : state.items.at(cx, cy);
        if (item == Item::kTarget) {
          state.items.at(cx, cy) = Item::kNone;
          --state.goal_remaining;
          out.reward += p.target_reward;
          e.alive = false;
        } else if (tile == Tile::kWall || item == Item::kObstacle || --e.timer <= 0) {
          e.alive = false;
        }
      }
    }
    std::erase_if(state.entities, [](const Entity& e) { return !e.alive; });

    const Box box = BoxOf(ship.pos, ship.w, ship.h);
    bool dead = HitsTerrain(state, box, true);
    for (const Entity& e : state.entities) {
      if (e.kind == EntityKind::kMovingObstacle && Overlap(box, BoxOf(e.pos, e.w, e.h))) dead = true;
    }
    if (dead) {
      ship.alive = false;
      out.failed = true;
      return out;
    }
    const int x0 = box.x >> Fixed::kFracBits;
    const int x1 = (box.x + box.w - 1) >> Fixed::kFracBits;
    const int y0 = box.y >> Fixed::kFracBits;
    const int y1 = (box.y + box.h - 1) >> Fixed::kFracBits;
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (state.items.at(x, y) == Item::kGoalShip) {
          out.reward += p.goal_reward;
          out.level_complete = true;
          return out;
        }
      }
    }
    return out;
  }

  // BFS on tiles free of walls, stationary obstacles, and every cell a moving
  // obstacle can sweep. The witness flies tile to tile along axis headings.
  SolveResult Solve(const GameState& fresh) const override {
    SolveResult result;
    const CaveFlyerParams& p = fresh.tables().caveflyer;
    GridLayout passable = fresh.terrain;
    Grid<uint8_t> blocked(passable.width(), passable.height(), 0);
    for (const Entity& e : fresh.entities) {
      if (e.kind == EntityKind::kMovingObstacle) MarkSweep(fresh, e, blocked);
    }
    Cell goal{-1, -1};
    for (int y = 0; y < passable.height(); ++y) {
      for (int x = 0; x < passable.width(); ++x) {
        if (fresh.items.at(x, y) == Item::kObstacle || blocked.at(x, y)) passable.at(x, y) = Tile::kWall;
        if (fresh.items.at(x, y) == Item::kGoalShip) goal = {x, y};
      }
    }
    const Cell start = PlayerCell(fresh);
    const bool aligned = fresh.player.pos == Centered(start) &&
                         fresh.player.heading % kHeadingQuarter == 0 &&
                         kHeadingQuarter % p.rotate_step == 0 &&
                         Fixed::kOne % p.speed.raw() == 0;
    passable.at(goal.x, goal.y) = fresh.terrain.at(goal.x, goal.y);
    const auto path = ShortestPath(passable, start, goal);
    result.expanded = CountOpen(passable);
    if (!path || !aligned) {
      result.verdict = Verdict::kUnknown;
      return result;
    }
    result.witness_path = *path;
    const int thrusts = Fixed::kOne / p.speed.raw();
    uint8_t heading = fresh.player.heading;
    for (size_t i = 1; i < path->size(); ++i) {
      const Cell step{(*path)[i].x - (*path)[i - 1].x, (*path)[i].y - (*path)[i - 1].y};
      const uint8_t want = static_cast<uint8_t>(HeadingFor(step));
      const int ccw = static_cast<uint8_t>(want - heading);
      // Turning left adds rotate_step to the heading.
      const bool left = ccw <= 128;
      const int turns = (left ? ccw : 256 - ccw) / p.rotate_step;
      for (int t = 0; t < turns; ++t) result.witness_actions.push_back(EncodeMove(left ? -1 : 1, 0));
      heading = want;
      for (int t = 0; t < thrusts; ++t) result.witness_actions.push_back(EncodeMove(0, 1));
    }
    // The ship's box reaches the goal tile before its center does; replay to
    // cut the plan at the completing tick and to confirm it survives.
    GameState sim = fresh;
    for (size_t i = 0; i < result.witness_actions.size(); ++i) {
      const TickOutcome o = Tick(sim, DecodeAction(result.witness_actions[i]));
      ++sim.level_step;
      if (o.failed) break;
      if (o.level_complete) {
        result.witness_actions.resize(i + 1);
        result.verdict = Verdict::kSolvable;
        return result;
      }
    }
    result.verdict = Verdict::kUnknown;
    return result;
  }

  View Camera(const GameState& state) const override {
    return AgentView(state, state.tables().caveflyer.view_tiles);
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    return {{"open_fraction", static_cast<double>(CountOpen(fresh.terrain)) / fresh.terrain.size()},
            {"targets", static_cast<double>(fresh.goal_total)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    const CaveFlyerParams& p = fresh.tables().caveflyer;
    return fresh.goal_total * p.target_reward + p.goal_reward;
  }
};

}  // namespace

const Game& CaveFlyer() {
  static const CaveFlyerGame game;
  return game;
}

}  // namespace procarcade::games
