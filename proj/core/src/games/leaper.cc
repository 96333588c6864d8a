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
#include <numeric>

#include "games/games.h"

namespace procarcade::games {
namespace {

enum class LaneKind : uint8_t { kSafe, kRoad, kWater };

struct Lane {
  LaneKind kind = LaneKind::kSafe;
  int dir = 0;
  int period = 1;
  uint32_t mask = 0;  // bit i: pattern cell i holds a car or log
};

// Closed-form lane occupancy; shared by the tick and the oracle.
struct Lanes {
  int width = 0;
  std::vector<Lane> rows;

  int Shift(const Lane& lane, int32_t t) const { return lane.dir * (t / lane.period); }
  bool Occupied(int y, int x, int32_t t) const {
    const Lane& lane = rows[y];
    const int idx = ((x - Shift(lane, t)) % width + width) % width;
    return (lane.mask >> idx) & 1;
  }
  int32_t Cycle() const {
    int32_t cycle = 1;
    for (const Lane& lane : rows) {
      if (lane.kind != LaneKind::kSafe) cycle = std::lcm(cycle, lane.period * width);
    }
    return cycle;
  }
};

struct LeapStep {
  int x = 0;
  int y = 0;
  bool dead = false;
  bool complete = false;
};

LeapStep Advance(const Lanes& lanes, int x, int y, int32_t t0, int dx, int dy) {
  LeapStep s{x, y};
  const int h = static_cast<int>(lanes.rows.size());
  if (x + dx >= 0 && x + dx < lanes.width && y + dy >= 0 && y + dy < h) {
    s.x += dx;
    s.y += dy;
  }
  const int32_t t1 = t0 + 1;
  const Lane& lane = lanes.rows[s.y];
  if (lane.kind == LaneKind::kWater && lanes.Occupied(s.y, s.x, t0) &&
      lanes.Shift(lane, t1) != lanes.Shift(lane, t0)) {
    s.x += lane.dir;
    if (s.x < 0 || s.x >= lanes.width) {
      s.dead = true;
      return s;
    }
  }
  if (lane.kind == LaneKind::kRoad && lanes.Occupied(s.y, s.x, t1)) s.dead = true;
  if (lane.kind == LaneKind::kWater && !lanes.Occupied(s.y, s.x, t1)) s.dead = true;
  if (!s.dead && s.y == 0) s.complete = true;
  return s;
}

uint32_t LanePattern(RngStream& rng, int width, int len_min, int len_max, int gap_min, int gap_max) {
  uint32_t mask = 0;
  int pos = 0;
  while (pos + len_min + gap_min <= width) {
    const int len = std::min(rng.Range(len_min, len_max), width - pos - gap_min);
    for (int i = 0; i < len; ++i) mask |= 1u << (pos + i);
    pos += len + rng.Range(gap_min, gap_max);
  }
  return mask;
}

Lanes LanesFromState(const GameState& s) {
  Lanes lanes;
  lanes.width = s.terrain.width();
  lanes.rows.resize(s.terrain.height());
  for (int y = 0; y < s.terrain.height(); ++y) {
    const Tile t = s.terrain.at(0, y);
    lanes.rows[y].kind = t == Tile::kRoad ? LaneKind::kRoad
                         : t == Tile::kWater ? LaneKind::kWater
                                             : LaneKind::kSafe;
  }
  for (const Entity& e : s.entities) {
    Lane& lane = lanes.rows[e.a];
    lane.dir = e.dir;
    lane.period = e.timer;
    lane.mask |= 1u << e.b;
  }
  return lanes;
}

void PlaceLaneEntities(GameState& s, const Lanes& lanes, int32_t t) {
  for (Entity& e : s.entities) {
    const int x = ((e.b + lanes.Shift(lanes.rows[e.a], t)) % lanes.width + lanes.width) % lanes.width;
    e.pos = {TileFixed(x), TileFixed(e.a)};
  }
}

class LeaperGame final : public Game {
 public:
  GameId id() const override { return GameId::kLeaper; }
  CameraMode camera_mode() const override { return CameraMode::kFullView; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const LeaperParams& p = ctx.tables().leaper;
    // Road and water counts share one latent draw, so they correlate.
    RngStream lanes_rng = ctx.Stream("lanes");
    const int latent = lanes_rng.Range(p.min_lanes, p.max_lanes);
    const int roads = std::clamp(latent + lanes_rng.Range(-p.lane_jitter, p.lane_jitter),
                                 p.min_lanes, p.max_lanes);
    const int waters = std::clamp(latent + lanes_rng.Range(-p.lane_jitter, p.lane_jitter),
                                  p.min_lanes, p.max_lanes);
    const int w = p.width;
    const int h = roads + waters + 3;
    state.terrain = GridLayout(w, h, Tile::kOpen);
    state.items = Grid<Item>(w, h);
    for (int x = 0; x < w; ++x) state.items.at(x, 0) = Item::kFinish;

    Lanes lanes;
    lanes.width = w;
    lanes.rows.resize(h);
    RngStream spawn = ctx.Stream("spawn");
    for (int y = 1; y < h - 1; ++y) {
      Lane& lane = lanes.rows[y];
      if (y <= waters) {
        lane.kind = LaneKind::kWater;
      } else if (y > waters + 1) {
        lane.kind = LaneKind::kRoad;
      } else {
        continue;  // median
      }
      lane.dir = spawn.Chance(500) ? 1 : -1;
      lane.period = spawn.Range(1, p.max_period);
      lane.mask = lane.kind == LaneKind::kRoad
                      ? LanePattern(spawn, w, 1, p.car_len_max, p.car_gap_min, p.car_gap_max)
                      : LanePattern(spawn, w, p.log_len_min, p.log_len_max, p.log_gap_min,
                                    p.log_gap_max);
      const Tile tile = lane.kind == LaneKind::kRoad ? Tile::kRoad : Tile::kWater;
      for (int x = 0; x < w; ++x) state.terrain.at(x, y) = tile;
      for (int i = 0; i < w; ++i) {
        if (!((lane.mask >> i) & 1)) continue;
        Entity e;
        e.kind = lane.kind == LaneKind::kRoad ? EntityKind::kCar : EntityKind::kLog;
        e.a = y;
        e.b = i;
        e.dir = lane.dir;
        e.timer = lane.period;
        state.entities.push_back(e);
      }
    }
    PlaceLaneEntities(state, lanes, 0);
    RngStream place = ctx.Stream("placement");
    PlacePlayer(state, {place.Range(0, w - 1), h - 1});
    state.goal_total = state.goal_remaining = 1;

    if (Solve(state).verdict != Verdict::kSolvable) {
      Fail(ErrorKind::kGeneration, "leaper lanes admit no crossing");
    }
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    TickOutcome out;
    const Lanes lanes = LanesFromState(state);
    const Cell d = GridMove(intent);
    const LeapStep s = Advance(lanes, state.player.TileX(), state.player.TileY(),
                               state.level_step, d.x, d.y);
    PlaceLaneEntities(state, lanes, state.level_step + 1);
    if (s.dead) {
      // The player may have been carried off the edge; keep it in view.
      PlacePlayer(state, {std::clamp(s.x, 0, lanes.width - 1), s.y});
      state.player.alive = false;
      out.failed = true;
      return out;
    }
    PlacePlayer(state, {s.x, s.y});
    if (s.complete) {
      state.goal_remaining = 0;
      out.reward = state.tables().leaper.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  // Exact BFS over (column, row, tick mod lane cycle).
  SolveResult Solve(const GameState& fresh) const override {
    SolveResult result;
    const Lanes lanes = LanesFromState(fresh);
    const int w = lanes.width;
    const int h = static_cast<int>(lanes.rows.size());
    const int32_t cycle = lanes.Cycle();
    const int32_t t_start = fresh.level_step;
    auto encode = [&](int x, int y, int32_t t) { return ((t % cycle) * h + y) * w + x; };
    std::vector<int32_t> parent(static_cast<size_t>(w) * h * cycle, -2);
    std::vector<int8_t> move(parent.size(), -1);
    struct Node { int x, y; int32_t t; };
    std::deque<Node> queue;
    const Node s0{fresh.player.TileX(), fresh.player.TileY(), t_start};
    parent[encode(s0.x, s0.y, s0.t)] = -1;
    queue.push_back(s0);
    constexpr Cell kMoves[5] = {{0, -1}, {1, 0}, {-1, 0}, {0, 0}, {0, 1}};
    int32_t goal = -1;
    while (!queue.empty() && goal < 0) {
      const Node n = queue.front();
      queue.pop_front();
      ++result.expanded;
      for (int m = 0; m < 5 && goal < 0; ++m) {
        const LeapStep s = Advance(lanes, n.x, n.y, n.t, kMoves[m].x, kMoves[m].y);
        if (s.dead) continue;
        const int32_t id = encode(s.x, s.y, n.t + 1);
        if (parent[id] != -2) continue;
        parent[id] = encode(n.x, n.y, n.t);
        move[id] = static_cast<int8_t>(m);
        if (s.complete) goal = id;
        queue.push_back({s.x, s.y, n.t + 1});
      }
    }
    if (goal < 0) {
      result.verdict = Verdict::kUnsolvable;
      return result;
    }
    for (int32_t id = goal;; id = parent[id]) {
      result.witness_path.push_back({id % w, (id / w) % h});
      if (parent[id] == -1) break;
      result.witness_actions.push_back(EncodeMove(kMoves[move[id]].x, -kMoves[move[id]].y));
    }
    std::reverse(result.witness_actions.begin(), result.witness_actions.end());
    std::reverse(result.witness_path.begin(), result.witness_path.end());
    result.verdict = Verdict::kSolvable;
    return result;
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    int roads = 0;
    int waters = 0;
    for (int y = 0; y < fresh.terrain.height(); ++y) {
      roads += fresh.terrain.at(0, y) == Tile::kRoad;
      waters += fresh.terrain.at(0, y) == Tile::kWater;
    }
    return {{"road_lanes", static_cast<double>(roads)},
            {"water_lanes", static_cast<double>(waters)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    return fresh.tables().leaper.completion_reward;
  }
};

}  // namespace

const Game& Leaper() {
  static const LeaperGame game;
  return game;
}

}  // namespace procarcade::games
