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
#include <array>

#include "games/games.h"

namespace procarcade::games {
namespace {

int Quadrant(const GridLayout& layout, Cell c) {
  return (c.x >= layout.width() / 2 ? 1 : 0) + (c.y >= layout.height() / 2 ? 2 : 0);
}

Cell EntityCell(const Entity& e) { return {e.pos.x.Floor(), e.pos.y.Floor()}; }

void PlaceEntity(Entity& e, Cell c) { e.pos = {TileFixed(c.x), TileFixed(c.y)}; }

bool Open(const GridLayout& layout, Cell c) {
  return layout.Get(c.x, c.y, Tile::kWall) != Tile::kWall;
}

int Manhattan(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

constexpr int Reverse(int dir) { return dir ^ 1; }  // kDirs4 pairs opposite moves

class ChaserGame final : public Game {
 public:
  GameId id() const override { return GameId::kChaser; }
  CameraMode camera_mode() const override { return CameraMode::kFullView; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const ChaserParams& p = ctx.tables().chaser;
    RngStream layout = ctx.Stream("layout");
    state.terrain = RemoveDeadEnds(KruskalMaze(layout, p.cells, p.cells), layout);
    const int w = state.terrain.width();
    const int h = state.terrain.height();
    state.items = Grid<Item>(w, h);

    RngStream place = ctx.Stream("placement");
    const auto open = [&](int x, int y) { return state.terrain.at(x, y) != Tile::kWall; };
    const Cell start = *PickCell(place, w, h, open);
    PlacePlayer(state, start);

    std::array<int, 4> quadrants = {0, 1, 2, 3};
    place.Shuffle(std::span<int>(quadrants));
    for (int i = 0; i < 3; ++i) {
      const auto star = PickCell(place, w, h, [&](int x, int y) {
        return open(x, y) && !(Cell{x, y} == start) &&
               Quadrant(state.terrain, {x, y}) == quadrants[i];
      });
      if (!star) Fail(ErrorKind::kGeneration, "empty chaser quadrant");
      state.items.at(star->x, star->y) = Item::kStar;
    }

    RngStream enemies = ctx.Stream("enemies");
    const Grid<int32_t> dist = BfsDistances(state.terrain, start);
    for (int i = 0; i < p.enemies; ++i) {
      const auto spawn = PickCell(enemies, w, h, [&](int x, int y) {
        return dist.at(x, y) >= p.min_spawn_distance;
      });
      if (!spawn) Fail(ErrorKind::kGeneration, "no chaser enemy spawn far enough");
      Entity e;
      e.kind = EntityKind::kEnemy;
      e.dir = -1;
      PlaceEntity(e, *spawn);
      state.entities.push_back(e);
    }

    int orbs = 0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (open(x, y) && state.items.at(x, y) == Item::kNone && !(Cell{x, y} == start)) {
          state.items.at(x, y) = Item::kOrb;
          ++orbs;
        }
      }
    }
    state.goal_total = state.goal_remaining = orbs;
    state.unit_reward = (p.r_max - p.completion_reward) / orbs;
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    const ChaserParams& p = state.tables().chaser;
    TickOutcome out;
    // Eggs count down before anything else, so an egg laid this tick stays
    // an egg for exactly hatch_ticks later ticks.
    for (Entity& e : state.entities) {
      if (e.kind == EntityKind::kEgg && --e.timer <= 0) {
        e.kind = EntityKind::kEnemy;
        e.dir = -1;
      }
    }
    const Cell from = PlayerCell(state);
    const Cell d = GridMove(intent);
    const Cell to{from.x + d.x, from.y + d.y};
    if (Open(state.terrain, to)) PlacePlayer(state, to);
    const Cell at = PlayerCell(state);

    Item& item = state.items.at(at.x, at.y);
    if (item == Item::kOrb) {
      item = Item::kNone;
      --state.goal_remaining;
      out.reward += state.unit_reward;
    } else if (item == Item::kStar) {
      item = Item::kNone;
      state.global_timer = p.vulnerable_ticks;
    }

    if (Collide(state, at, out)) return out;

    if (state.level_step % p.enemy_period == 0) {
      for (Entity& e : state.entities) {
        if (e.kind != EntityKind::kEnemy || !e.alive) continue;
        const Cell before = EntityCell(e);
        MoveEnemy(state, e, p);
        // Swapping tiles with the player counts as contact.
        if (before == at && EntityCell(e) == from) {
          PlaceEntity(e, at);
        }
      }
      if (Collide(state, at, out)) return out;
    }

    if (state.global_timer > 0) --state.global_timer;

    if (state.goal_remaining == 0) {
      out.reward += p.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  SolveResult Solve(const GameState& fresh) const override {
    // Enemies are ignored: the oracle checks that one walk reaches every orb.
    SolveResult result;
    Grid<Item> items = fresh.items;
    Cell at = PlayerCell(fresh);
    result.witness_path.push_back(at);
    int remaining = fresh.goal_total;
    while (remaining > 0) {
      const Grid<int32_t> dist = BfsDistances(fresh.terrain, at);
      result.expanded += static_cast<int64_t>(dist.size());
      Cell best{-1, -1};
      for (int y = 0; y < items.height(); ++y) {
        for (int x = 0; x < items.width(); ++x) {
          if (items.at(x, y) != Item::kOrb || dist.at(x, y) < 0) continue;
          if (best.x < 0 || dist.at(x, y) < dist.at(best.x, best.y)) best = {x, y};
        }
      }
      if (best.x < 0) {
        result.verdict = Verdict::kUnsolvable;
        return result;
      }
      const std::vector<Cell> leg = *ShortestPath(fresh.terrain, at, best);
      for (size_t i = 1; i < leg.size(); ++i) {
        if (items.at(leg[i].x, leg[i].y) == Item::kOrb) --remaining;
        items.at(leg[i].x, leg[i].y) = Item::kNone;
        result.witness_path.push_back(leg[i]);
      }
      at = best;
    }
    result.witness_actions = ActionsForPath(result.witness_path);
    result.verdict = Verdict::kSolvable;
    return result;
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    return {{"orbs", static_cast<double>(fresh.goal_total)},
            {"min_open_degree", static_cast<double>(MinOpenDegree(fresh.terrain))}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    return fresh.tables().chaser.r_max;
  }

 private:
  // Resolves player-enemy contact at the player's tile. Returns true on death.
  static bool Collide(GameState& state, Cell at, TickOutcome& out) {
    const ChaserParams& p = state.tables().chaser;
    for (Entity& e : state.entities) {
      if (e.kind != EntityKind::kEnemy || !(EntityCell(e) == at)) continue;
      if (state.global_timer <= 0) {
        state.player.alive = false;
        out.failed = true;
        return true;
      }
      // Eaten enemies return as eggs somewhere else on the map.
      const auto spot = PickCell(state.tick_rng, state.terrain.width(), state.terrain.height(),
                                 [&](int x, int y) {
                                   return state.terrain.at(x, y) != Tile::kWall &&
                                          Manhattan({x, y}, at) > 1;
                                 });
      e.kind = EntityKind::kEgg;
      e.timer = p.hatch_ticks;
      e.dir = -1;
      if (spot) PlaceEntity(e, *spot);
    }
    return false;
  }

  static void MoveEnemy(GameState& state, Entity& e, const ChaserParams& p) {
    const Cell c = EntityCell(e);
    std::array<int, 4> options{};
    int n = 0;
    for (int dir = 0; dir < 4; ++dir) {
      if (e.dir >= 0 && dir == Reverse(e.dir)) continue;
      if (Open(state.terrain, {c.x + kDirs4[dir].x, c.y + kDirs4[dir].y})) options[n++] = dir;
    }
    if (n == 0 && e.dir >= 0) {
      options[n++] = Reverse(e.dir);
    }
    if (n == 0) return;
    int pick = options[0];
    const Cell target = PlayerCell(state);
    if (state.tick_rng.Chance(p.chase_permille)) {
      const bool flee = state.global_timer > 0;
      int best = flee ? -1 : 1 << 30;
      for (int i = 0; i < n; ++i) {
        const int dist = Manhattan({c.x + kDirs4[options[i]].x, c.y + kDirs4[options[i]].y}, target);
        if (flee ? dist > best : dist < best) {
          best = dist;
          pick = options[i];
        }
      }
    } else {
      pick = options[state.tick_rng.NextUint(static_cast<uint32_t>(n))];
    }
    e.dir = pick;
    PlaceEntity(e, {c.x + kDirs4[pick].x, c.y + kDirs4[pick].y});
  }
};

}  // namespace

const Game& Chaser() {
  static const ChaserGame game;
  return game;
}

}  // namespace procarcade::games
