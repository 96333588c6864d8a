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
#include <utility>
#include <vector>

#include "games/games.h"

namespace procarcade::games {
namespace {

// Horizons, in ticks of linear fish extrapolation, tried in order.
constexpr int kLookaheads[] = {10, 8, 12, 6, 16};
constexpr int kBranching = 3;            // ranked moves tried per tick
constexpr int kMaxJumpLog = 6;           // backtracking jumps cap at 64 ticks
constexpr int64_t kSearchBudget = 40000;  // simulated ticks per horizon

// Fish height is three quarters of the width.
Fixed HeightFor(Fixed w) { return Fixed::FromRaw(w.raw() * 3 / 4); }

struct Rect {
  int32_t x, y, w, h;
};

bool Overlap(const Rect& a, const Rect& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

Rect RectOf(FixedVec pos, Fixed w, Fixed h) { return {pos.x.raw(), pos.y.raw(), w.raw(), h.raw()}; }

// Eats needed before the player outgrows every spawnable fish.
int EatsToWin(const BigFishParams& p) {
  const int32_t need = p.max_fish_width.raw() - p.player_width.raw() + 1;
  return (need + p.growth.raw() - 1) / p.growth.raw();
}

FixedVec MovePlayer(const GameState& s, const BigFishParams& p, int dx, int dy) {
  const int32_t limit_x = p.world * Fixed::kOne - s.player.w.raw();
  const int32_t limit_y = p.world * Fixed::kOne - s.player.h.raw();
  const int32_t x = std::clamp(s.player.pos.x.raw() + dx * p.player_speed.raw(), 0, limit_x);
  const int32_t y = std::clamp(s.player.pos.y.raw() - dy * p.player_speed.raw(), 0, limit_y);
  return {Fixed::FromRaw(x), Fixed::FromRaw(y)};
}

class BigFishGame final : public Game {
 public:
  GameId id() const override { return GameId::kBigFish; }
  CameraMode camera_mode() const override { return CameraMode::kFullView; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const BigFishParams& p = ctx.tables().bigfish;
    state.terrain = GridLayout(p.world, p.world, Tile::kOpen);
    state.items = Grid<Item>(p.world, p.world);
    state.player.w = p.player_width;
    state.player.h = HeightFor(p.player_width);
    const int32_t half = p.world * Fixed::kOne / 2;
    state.player.pos = {Fixed::FromRaw(half - p.player_width.raw() / 2),
                        Fixed::FromRaw(half - state.player.h.raw() / 2)};
    state.goal_total = state.goal_remaining = EatsToWin(p);
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    const BigFishParams& p = state.tables().bigfish;
    TickOutcome out;
    state.player.pos = MovePlayer(state, p, intent.dx, intent.dy);
    if (intent.dx != 0) state.player.facing = intent.dx;

    const int32_t world = p.world * Fixed::kOne;
    for (Entity& fish : state.entities) {
      fish.pos.x += fish.vel.x;
      if (fish.pos.x.raw() > world || fish.pos.x.raw() + fish.w.raw() < 0) fish.alive = false;
    }
    Spawn(state, p);

    const Rect me = RectOf(state.player.pos, state.player.w, state.player.h);
    for (Entity& fish : state.entities) {
      if (!fish.alive || !Overlap(me, RectOf(fish.pos, fish.w, fish.h))) continue;
      if (fish.w < state.player.w) {
        fish.alive = false;
        out.reward += p.fish_reward;
        state.player.w += p.growth;
        state.player.h = HeightFor(state.player.w);
        --state.goal_remaining;
        // The win is decided on the eat that crosses the cap, so one tick
        // never pays for more than the remaining eats.
        if (state.player.w > p.max_fish_width) break;
      } else {
        state.player.alive = false;
        out.failed = true;
        break;
      }
    }
    std::erase_if(state.entities, [](const Entity& e) { return !e.alive; });
    if (!out.failed && state.player.w > p.max_fish_width) {
      out.reward += p.completion_reward;
      out.level_complete = true;
    }
    return out;
  }

  // Depth-first search on exact copies of the state. Each tick tries the
  // best few moves in heuristic order and backtracks on death; rankings with
  // several lookahead horizons are tried in turn. A win proves solvability;
  // exhausting every search is reported as unknown.
  SolveResult Solve(const GameState& fresh) const override {
    SolveResult result;
    for (int lookahead : kLookaheads) {
      if (Search(fresh, lookahead, result)) {
        result.verdict = Verdict::kSolvable;
        return result;
      }
    }
    result.verdict = Verdict::kUnknown;
    return result;
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    return {{"eats_to_win", static_cast<double>(fresh.goal_total)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    const BigFishParams& p = fresh.tables().bigfish;
    return fresh.goal_total * p.fish_reward + p.completion_reward;
  }

 private:
  static void Spawn(GameState& state, const BigFishParams& p) {
    RngStream& rng = state.tick_rng;
    if (!rng.Chance(p.spawn_permille) || static_cast<int>(state.entities.size()) >= p.max_fish) return;
    Entity fish;
    fish.kind = EntityKind::kFish;
    const int32_t scale = rng.Range(p.min_scale_permille, p.max_scale_permille);
    const int32_t width = static_cast<int32_t>(static_cast<int64_t>(state.player.w.raw()) * scale / 1000);
    fish.w = Fixed::FromRaw(std::clamp(width, p.min_fish_width.raw(), p.max_fish_width.raw()));
    fish.h = HeightFor(fish.w);
    const int32_t world = p.world * Fixed::kOne;
    const int32_t y = rng.Range(0, world - fish.h.raw());
    const Fixed speed = Fixed::FromRaw(rng.Range(p.fish_speed_min.raw(), p.fish_speed_max.raw()));
    const bool from_left = rng.Chance(500);
    fish.dir = from_left ? 1 : -1;
    fish.vel = {from_left ? speed : -speed, Fixed()};
    fish.pos = {Fixed::FromRaw(from_left ? -fish.w.raw() : world), Fixed::FromRaw(y)};
    state.entities.push_back(fish);
  }

  bool Search(const GameState& fresh, int lookahead, SolveResult& result) const {
    const BigFishParams& p = fresh.tables().bigfish;
    struct Frame {
      GameState state;
      std::array<int, 9> order;
      int next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({fresh, Rank(fresh, p, lookahead)});
    size_t deepest = 1;
    int jump = 0;
    for (int64_t spent = 0; !stack.empty() && spent < kSearchBudget;) {
      Frame& top = stack.back();
      if (top.next == kBranching || static_cast<int32_t>(stack.size()) > kDefaultMaxEpisodeSteps) {
        // Repeated dead ends back up geometrically further.
        const size_t drop = std::min(stack.size(), size_t{1} << std::min(jump++, kMaxJumpLog));
        stack.resize(stack.size() - drop);
        continue;
      }
      const int action = top.order[top.next++];
      GameState sim = top.state;
      ++spent;
      ++result.expanded;
      const TickOutcome o = Tick(sim, DecodeAction(action));
      ++sim.level_step;
      if (o.failed) continue;
      if (o.level_complete) {
        stack.push_back({std::move(sim), {}});
        for (size_t i = 0; i + 1 < stack.size(); ++i) {
          result.witness_actions.push_back(stack[i].order[stack[i].next - 1]);
          result.witness_path.push_back(PlayerCell(stack[i + 1].state));
        }
        return true;
      }
      if (stack.size() + 1 > deepest) {
        deepest = stack.size() + 1;
        jump = 0;
      }
      const std::array<int, 9> order = Rank(sim, p, lookahead);
      stack.push_back({std::move(sim), order});
    }
    return false;
  }

  // Scores each move by collision risk over the lookahead window, then by
  // distance from the spawn edges, then by distance to the nearest prey.
  static std::array<int, 9> Rank(const GameState& s, const BigFishParams& p, int lookahead) {
    const int32_t world = p.world * Fixed::kOne;
    const int32_t margin = p.player_speed.raw() / 2;
    std::array<std::pair<int64_t, int>, 9> scored;
    int slot = 0;
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        const FixedVec first = MovePlayer(s, p, dx, dy);
        int64_t score = 0;
        int64_t nearest = INT64_MAX;
        for (const Entity& fish : s.entities) {
          if (fish.w < s.player.w) {
            const int64_t fx = fish.pos.x.raw() + fish.vel.x.raw() * 2 + fish.w.raw() / 2;
            const int64_t fy = fish.pos.y.raw() + fish.h.raw() / 2;
            const int64_t cx = first.x.raw() + s.player.w.raw() / 2;
            const int64_t cy = first.y.raw() + s.player.h.raw() / 2;
            nearest = std::min(nearest, std::abs(fx - cx) + std::abs(fy - cy));
            continue;
          }
          FixedVec pos = first;
          for (int k = 1; k <= lookahead; ++k) {
            if (k > 1) {
              pos.x = Fixed::FromRaw(std::clamp(pos.x.raw() + dx * p.player_speed.raw(), 0,
                                                world - s.player.w.raw()));
              pos.y = Fixed::FromRaw(std::clamp(pos.y.raw() - dy * p.player_speed.raw(), 0,
                                                world - s.player.h.raw()));
            }
            Rect threat = RectOf({Fixed::FromRaw(fish.pos.x.raw() + fish.vel.x.raw() * k), fish.pos.y},
                                 fish.w, fish.h);
            threat.x -= margin;
            threat.y -= margin;
            threat.w += 2 * margin;
            threat.h += 2 * margin;
            if (Overlap(RectOf(pos, s.player.w, s.player.h), threat)) {
              score -= int64_t{1} << (40 - k);
              break;
            }
          }
        }
        // New fish enter from the left and right edges.
        const int32_t left_gap = first.x.raw();
        const int32_t right_gap = world - first.x.raw() - s.player.w.raw();
        const int32_t edge = std::min(left_gap, right_gap);
        if (edge < 2 * Fixed::kOne) score -= int64_t{1} << 30 >> (edge / 64);
        if (nearest == INT64_MAX) {
          const int64_t c = world / 2;
          nearest = std::abs(first.x.raw() + s.player.w.raw() / 2 - c) +
                    std::abs(first.y.raw() + s.player.h.raw() / 2 - c);
        }
        score -= nearest;
        scored[slot++] = {-score, EncodeMove(dx, dy)};
      }
    }
    std::sort(scored.begin(), scored.end());
    std::array<int, 9> order;
    for (int i = 0; i < 9; ++i) order[i] = scored[i].second;
    return order;
  }
};

}  // namespace

const Game& BigFish() {
  static const BigFishGame game;
  return game;
}

}  // namespace procarcade::games
