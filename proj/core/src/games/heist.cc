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
#include <deque>

#include "games/games.h"

namespace procarcade::games {
namespace {

constexpr Item kKeys[3] = {Item::kKeyRed, Item::kKeyGreen, Item::kKeyBlue};
constexpr Item kLocks[3] = {Item::kLockRed, Item::kLockGreen, Item::kLockBlue};

int LockColor(Item item) {
  for (int c = 0; c < 3; ++c) {
    if (kLocks[c] == item) return c;
  }
  return -1;
}

int KeyColor(Item item) {
  for (int c = 0; c < 3; ++c) {
    if (kKeys[c] == item) return c;
  }
  return -1;
}

// Tiles reachable from 'from' without entering any cell flagged in 'blocked'.
Grid<uint8_t> Reachable(const GridLayout& layout, const Grid<uint8_t>& blocked, Cell from) {
  Grid<uint8_t> seen(layout.width(), layout.height(), 0);
  std::vector<Cell> stack{from};
  seen.at(from.x, from.y) = 1;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (const Cell& d : kDirs4) {
      const int nx = c.x + d.x;
      const int ny = c.y + d.y;
      if (layout.Get(nx, ny, Tile::kWall) == Tile::kWall || seen.at(nx, ny) || blocked.at(nx, ny)) {
        continue;
      }
      seen.at(nx, ny) = 1;
      stack.push_back({nx, ny});
    }
  }
  return seen;
}

class HeistGame final : public Game {
 public:
  GameId id() const override { return GameId::kHeist; }
  CameraMode camera_mode() const override { return CameraMode::kFullView; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const HeistParams& p = ctx.tables().heist;
    int w = p.memory_cells;
    int h = p.memory_cells;
    if (!ctx.memory_mode) {
      RngStream size = ctx.Stream("size");
      w = size.Range(p.min_cells, p.max_cells);
      h = size.Range(p.min_cells, p.max_cells);
    }
    RngStream layout = ctx.Stream("layout");
    state.terrain = KruskalMaze(layout, w, h);
    const int tw = state.terrain.width();
    const int th = state.terrain.height();
    state.items = Grid<Item>(tw, th);

    RngStream place = ctx.Stream("placement");
    const auto open = [&](int x, int y) { return state.terrain.at(x, y) != Tile::kWall; };
    const Cell start = *PickCell(place, tw, th, open);
    const Cell gem = *PickCell(place, tw, th, [&](int x, int y) {
      return open(x, y) && !(Cell{x, y} == start);
    });
    PlacePlayer(state, start);
    state.items.at(gem.x, gem.y) = Item::kGem;

    // Locks sit on the unique start-to-gem path, in traversal order.
    RngStream locks = ctx.Stream("locks");
    const std::vector<Cell> path = *ShortestPath(state.terrain, start, gem);
    const int interior = static_cast<int>(path.size()) - 2;
    const int count = std::min(locks.Range(p.min_locks, p.max_locks), interior);
    std::vector<int> slots(interior);
    for (int i = 0; i < interior; ++i) slots[i] = i + 1;
    locks.Shuffle(std::span<int>(slots));
    slots.resize(count);
    std::sort(slots.begin(), slots.end());
    std::array<int, 3> colors = {0, 1, 2};
    locks.Shuffle(std::span<int>(colors));

    Grid<uint8_t> blocked(tw, th, 0);
    for (int slot : slots) blocked.at(path[slot].x, path[slot].y) = 1;
    for (int i = 0; i < count; ++i) {
      const Cell lock = path[slots[i]];
      state.items.at(lock.x, lock.y) = kLocks[colors[i]];
    }
    // Key i goes where the player can stand with locks before i opened.
    for (int i = 0; i < count; ++i) {
      const Grid<uint8_t> region = Reachable(state.terrain, blocked, start);
      const auto key = PickCell(place, tw, th, [&](int x, int y) {
        return region.at(x, y) && !(Cell{x, y} == start) && state.items.at(x, y) == Item::kNone;
      });
      if (!key) Fail(ErrorKind::kGeneration, "no room for heist key");
      state.items.at(key->x, key->y) = kKeys[colors[i]];
      blocked.at(path[slots[i]].x, path[slots[i]].y) = 0;
    }
    state.goal_total = state.goal_remaining = 1;
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    TickOutcome out;
    const Cell d = GridMove(intent);
    const Cell at = PlayerCell(state);
    const Cell to{at.x + d.x, at.y + d.y};
    if (state.terrain.Get(to.x, to.y, Tile::kWall) == Tile::kWall) return out;
    Item& item = state.items.at(to.x, to.y);
    const int lock = LockColor(item);
    if (lock >= 0) {
      if (!(state.player.keys & (1u << lock))) return out;
      item = Item::kNone;
    }
    PlacePlayer(state, to);
    const int key = KeyColor(item);
    if (key >= 0) {
      state.player.keys |= 1u << key;
      item = Item::kNone;
    } else if (item == Item::kGem) {
      item = Item::kNone;
      state.goal_remaining = 0;
      out.reward = state.tables().heist.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  // Exact BFS over (tile, keys held); held keys open every lock of their color.
  SolveResult Solve(const GameState& fresh) const override {
    SolveResult result;
    const int w = fresh.terrain.width();
    const int h = fresh.terrain.height();
    const int n = w * h * 8;
    std::vector<int32_t> parent(n, -2);
    auto encode = [w, h](int x, int y, uint32_t k) { return static_cast<int32_t>((k * h + y) * w + x); };
    const Cell start = PlayerCell(fresh);
    const int32_t s0 = encode(start.x, start.y, fresh.player.keys);
    parent[s0] = -1;
    std::deque<int32_t> queue{s0};
    int32_t goal = -1;
    while (!queue.empty() && goal < 0) {
      const int32_t s = queue.front();
      queue.pop_front();
      ++result.expanded;
      const int x = s % w;
      const int y = (s / w) % h;
      const uint32_t keys = static_cast<uint32_t>(s / (w * h));
      for (const Cell& d : kDirs4) {
        const int nx = x + d.x;
        const int ny = y + d.y;
        if (fresh.terrain.Get(nx, ny, Tile::kWall) == Tile::kWall) continue;
        const Item item = fresh.items.at(nx, ny);
        const int lock = LockColor(item);
        if (lock >= 0 && !(keys & (1u << lock))) continue;
        uint32_t next_keys = keys;
        const int key = KeyColor(item);
        if (key >= 0) next_keys |= 1u << key;
        const int32_t t = encode(nx, ny, next_keys);
        if (parent[t] != -2) continue;
        parent[t] = s;
        if (item == Item::kGem) {
          goal = t;
          break;
        }
        queue.push_back(t);
      }
    }
    if (goal < 0) {
      result.verdict = Verdict::kUnsolvable;
      return result;
    }
    for (int32_t s = goal; s >= 0; s = parent[s]) result.witness_path.push_back({s % w, (s / w) % h});
    std::reverse(result.witness_path.begin(), result.witness_path.end());
    result.witness_actions = ActionsForPath(result.witness_path);
    result.verdict = Verdict::kSolvable;
    return result;
  }

  View Camera(const GameState& state) const override {
    return state.memory_mode ? MemoryView(state) : FullView(state);
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    int locks = 0;
    for (Item item : fresh.items.cells()) locks += LockColor(item) >= 0;
    return {{"maze_width_cells", static_cast<double>(fresh.terrain.width() / 2)},
            {"maze_height_cells", static_cast<double>(fresh.terrain.height() / 2)},
            {"locks", static_cast<double>(locks)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    return fresh.tables().heist.completion_reward;
  }
};

}  // namespace

const Game& Heist() {
  static const HeistGame game;
  return game;
}

}  // namespace procarcade::games
