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
#ifndef PROCARCADE_GAMES_PLATFORM_WORLD_H_
#define PROCARCADE_GAMES_PLATFORM_WORLD_H_

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "games/games.h"

namespace procarcade::games {

// Enemy pacing over [x0, x0 + patrol] on one row; period 2 * patrol.
struct Pacer {
  int x0 = 0;
  int y = 0;
  int patrol = 1;

  int X(int32_t t) const {
    const int phase = t % (2 * patrol);
    return x0 + (phase <= patrol ? phase : 2 * patrol - phase);
  }
};

struct PlatformStep {
  bool dead = false;
  bool complete = false;
};

// Static view of a platformer level shared by the tick and the oracle.
struct PlatformWorld {
  const GridLayout* layout = nullptr;
  const Grid<Item>* items = nullptr;
  JumpModel model;
  Item goal_item = Item::kCoin;
  std::vector<Pacer> pacers;

  bool Lethal(Item item) const { return item == Item::kSaw || item == Item::kBomb; }

  bool PacerAt(Cell c, int32_t t) const {
    for (const Pacer& p : pacers) {
      if (p.y == c.y && p.X(t) == c.x) return true;
    }
    return false;
  }

  PlatformStep Step(Body& body, int32_t t0, int dx, bool jump) const {
    PlatformStep out;
    const BodyStep s = StepBody(*layout, model, body, dx, jump);
    if (s.fell_out) {
      out.dead = true;
      return out;
    }
    for (int i = 0; i < s.visited_count; ++i) {
      const Cell c = s.visited[i];
      const Item item = items->Get(c.x, c.y, Item::kNone);
      if (Lethal(item) || PacerAt(c, t0) || PacerAt(c, t0 + 1)) {
        out.dead = true;
        return out;
      }
      if (item == goal_item) {
        out.complete = true;
        return out;
      }
    }
    return out;
  }

  int32_t Cycle() const {
    int32_t cycle = 1;
    for (const Pacer& p : pacers) cycle = std::lcm(cycle, 2 * p.patrol);
    return cycle;
  }
};

inline int PlatformAction(int dx, bool jump) { return EncodeMove(dx, jump ? 1 : 0); }

// Greedy best-first search over (x, y, vy, charge, t mod cycle). The state
// space is finite and fully explored before giving up, so the verdict is exact.
inline SolveResult SolvePlatformWorld(const PlatformWorld& world, Body start, int32_t t_start,
                                      Cell goal) {
  SolveResult result;
  const GridLayout& layout = *world.layout;
  const int w = layout.width();
  const int h = layout.height();
  const int vy_span = world.model.max_fall + world.model.max_impulse + world.model.impulse + 2;
  const int vy_offset = world.model.max_impulse + world.model.impulse + 1;
  const int charges = world.model.charged ? world.model.charge_cap + 1 : 1;
  const int32_t cycle = world.Cycle();
  const size_t states = static_cast<size_t>(w) * h * vy_span * charges * cycle;
  auto encode = [&](const Body& b, int32_t t) {
    return ((((static_cast<size_t>(t % cycle) * charges + b.charge) * vy_span + (b.vy + vy_offset)) * h +
             b.y) * w + b.x);
  };
  struct Node {
    Body body;
    int32_t t;
    int64_t parent;
    int8_t action;
  };
  std::vector<Node> nodes;
  std::vector<uint8_t> seen(states, 0);
  using Entry = std::pair<int64_t, int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  auto priority = [&](const Body& b, int32_t g) {
    return (static_cast<int64_t>(std::abs(goal.x - b.x)) * 4 + std::abs(goal.y - b.y)) * 4096 + g;
  };
  nodes.push_back({start, t_start, -1, -1});
  seen[encode(start, t_start)] = 1;
  open.push({priority(start, 0), 0});
  int64_t goal_node = -1;
  constexpr int kDx[3] = {1, 0, -1};
  while (!open.empty() && goal_node < 0) {
    const int64_t id = open.top().second;
    open.pop();
    ++result.expanded;
    for (int jump = 1; jump >= 0 && goal_node < 0; --jump) {
      for (int k = 0; k < 3; ++k) {
        Body b = nodes[id].body;
        const int32_t t = nodes[id].t;
        const PlatformStep s = world.Step(b, t, kDx[k], jump != 0);
        if (s.dead) continue;
        if (b.y < 0 || b.y >= h) continue;
        const size_t key = encode(b, t + 1);
        if (!s.complete && seen[key]) continue;
        seen[key] = 1;
        nodes.push_back({b, t + 1, id, static_cast<int8_t>(PlatformAction(kDx[k], jump != 0))});
        const int64_t child = static_cast<int64_t>(nodes.size()) - 1;
        if (s.complete) {
          goal_node = child;
          break;
        }
        open.push({priority(b, t + 1 - t_start), child});
      }
    }
  }
  if (goal_node < 0) {
    result.verdict = Verdict::kUnsolvable;
    return result;
  }
  for (int64_t id = goal_node; id >= 0; id = nodes[id].parent) {
    result.witness_path.push_back({nodes[id].body.x, nodes[id].body.y});
    if (nodes[id].parent >= 0) result.witness_actions.push_back(nodes[id].action);
  }
  std::reverse(result.witness_path.begin(), result.witness_path.end());
  std::reverse(result.witness_actions.begin(), result.witness_actions.end());
  result.verdict = Verdict::kSolvable;
  return result;
}

// Horizontal scrolling camera; short worlds keep the floor at the frame bottom.
inline View ScrollingView(const GameState& state, int span) {
  View view;
  view.span = span;
  const int w = state.terrain.width();
  const int h = state.terrain.height();
  const int32_t px = state.player.pos.x.raw() + Fixed::kOne / 2 - span * Fixed::kOne / 2;
  const int32_t py = state.player.pos.y.raw() + Fixed::kOne / 2 - span * Fixed::kOne / 2;
  const int32_t max_left = std::max(0, w - span) * Fixed::kOne;
  view.left = Fixed::FromRaw(w >= span ? std::clamp(px, 0, max_left) : (w - span) * Fixed::kOne / 2);
  view.top = Fixed::FromRaw(h >= span ? std::clamp(py, 0, (h - span) * Fixed::kOne)
                                      : (h - span) * Fixed::kOne);
  return view;
}

inline Body BodyOf(const GameState& s) {
  return {s.player.TileX(), s.player.TileY(), s.player.vy, s.player.charge};
}

inline void StoreBody(GameState& s, const Body& b) {
  PlacePlayer(s, {b.x, std::min(b.y, s.terrain.height() - 1)});
  s.player.vy = b.vy;
  s.player.charge = b.charge;
}

}  // namespace procarcade::games

#endif  // PROCARCADE_GAMES_PLATFORM_WORLD_H_
