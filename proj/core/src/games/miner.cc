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
#include <queue>
#include <unordered_set>

#include "games/games.h"
#include "procarcade/hash.h"

namespace procarcade::games {
namespace {

// Compact board shared by the tick function and the search oracle.
enum Code : uint8_t { kEmpty, kSoil, kRock, kBoulder, kDiamond, kExitCode };
constexpr uint8_t kFalling = 0x10;
constexpr uint8_t kCodeMask = 0x0F;

struct Board {
  int w = 0;
  int h = 0;
  std::vector<uint8_t> c;
  int px = 0;
  int py = 0;
  int remaining = 0;

  uint8_t& at(int x, int y) { return c[y * w + x]; }
  uint8_t at(int x, int y) const { return c[y * w + x]; }
  uint8_t base(int x, int y) const { return at(x, y) & kCodeMask; }
  bool Free(int x, int y) const {
    return x >= 0 && y >= 0 && x < w && y < h && at(x, y) == kEmpty && !(x == px && y == py);
  }
};

struct BoardStep {
  int diamonds = 0;
  bool complete = false;
  bool dead = false;
};

bool Rounded(uint8_t base) { return base == kBoulder || base == kDiamond; }

BoardStep StepBoard(Board& b, int dx, int dy) {
  BoardStep out;
  if (dx != 0 || dy != 0) {
    const int tx = b.px + dx;
    const int ty = b.py + dy;
    const uint8_t code = (tx >= 0 && ty >= 0 && tx < b.w && ty < b.h) ? b.base(tx, ty) : static_cast<uint8_t>(kRock);
    bool enter = false;
    switch (code) {
      case kEmpty:
      case kSoil:
        enter = true;
        break;
      case kDiamond:
        enter = true;
        ++out.diamonds;
        --b.remaining;
        break;
      case kExitCode:
        if (b.remaining == 0) {
          b.px = tx;
          b.py = ty;
          out.complete = true;
          return out;
        }
        break;
      default:
        break;
    }
    if (enter) {
      b.at(tx, ty) = kEmpty;
      b.px = tx;
      b.py = ty;
    }
  }

  // Gravity, bottom row first so each object moves at most once per tick.
  std::vector<uint8_t> moved(b.c.size(), 0);
  for (int y = b.h - 2; y >= 0; --y) {
    for (int x = 0; x < b.w; ++x) {
      const uint8_t cell = b.at(x, y);
      const uint8_t base = cell & kCodeMask;
      if (!Rounded(base) || moved[y * b.w + x]) continue;
      const bool falling = (cell & kFalling) != 0;
      if (x == b.px && y + 1 == b.py) {
        if (falling) out.dead = true;
        b.at(x, y) = base;
        continue;
      }
      auto move_to = [&](int nx, int ny) {
        b.at(x, y) = kEmpty;
        b.at(nx, ny) = base | kFalling;
        moved[ny * b.w + nx] = 1;
      };
      if (b.Free(x, y + 1)) {
        move_to(x, y + 1);
      } else if (Rounded(b.base(x, y + 1)) && b.Free(x - 1, y) && b.Free(x - 1, y + 1)) {
        move_to(x - 1, y);
      } else if (Rounded(b.base(x, y + 1)) && b.Free(x + 1, y) && b.Free(x + 1, y + 1)) {
        move_to(x + 1, y);
      } else {
        b.at(x, y) = base;
      }
    }
  }
  return out;
}

Board ToBoard(const GameState& s) {
  Board b;
  b.w = s.terrain.width();
  b.h = s.terrain.height();
  b.c.resize(static_cast<size_t>(b.w) * b.h);
  for (int y = 0; y < b.h; ++y) {
    for (int x = 0; x < b.w; ++x) {
      uint8_t code = kEmpty;
      switch (s.items.at(x, y)) {
        case Item::kBoulder: code = kBoulder; break;
        case Item::kDiamond: code = kDiamond; break;
        case Item::kExit: code = kExitCode; break;
        default:
          code = s.terrain.at(x, y) == Tile::kWall ? kRock
                 : s.terrain.at(x, y) == Tile::kDirt ? kSoil
                                                     : kEmpty;
      }
      if (s.flags.size() == b.c.size() && s.flags.at(x, y)) code |= kFalling;
      b.at(x, y) = code;
    }
  }
  b.px = s.player.TileX();
  b.py = s.player.TileY();
  b.remaining = s.goal_remaining;
  return b;
}

void FromBoard(const Board& b, GameState& s) {
  if (s.flags.size() != b.c.size()) s.flags = Grid<uint8_t>(b.w, b.h, 0);
  for (int y = 0; y < b.h; ++y) {
    for (int x = 0; x < b.w; ++x) {
      const uint8_t base = b.base(x, y);
      Tile tile = Tile::kOpen;
      Item item = Item::kNone;
      switch (base) {
        case kSoil: tile = Tile::kDirt; break;
        case kRock: tile = Tile::kWall; break;
        case kBoulder: item = Item::kBoulder; break;
        case kDiamond: item = Item::kDiamond; break;
        case kExitCode: item = Item::kExit; break;
        default: break;
      }
      s.terrain.at(x, y) = tile;
      s.items.at(x, y) = item;
      s.flags.at(x, y) = (b.at(x, y) & kFalling) ? 1 : 0;
    }
  }
  PlacePlayer(s, {b.px, b.py});
  s.goal_remaining = b.remaining;
}

uint64_t BoardKey(const Board& b) {
  Hasher h;
  h.AddBytes(std::span<const uint8_t>(b.c.data(), b.c.size()));
  h.Add(static_cast<uint64_t>(b.px) << 32 | static_cast<uint32_t>(b.py));
  return h.digest();
}

constexpr int kSearchBudget = 20000;
constexpr Cell kSearchMoves[5] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0, 0}};

class MinerGame final : public Game {
 public:
  GameId id() const override { return GameId::kMiner; }
  CameraMode camera_mode() const override { return CameraMode::kFullView; }

  void Generate(const GenContext& ctx, GameState& state) const override {
    const MinerParams& p = ctx.tables().miner;
    const int w = ctx.memory_mode ? p.memory_width : p.width;
    const int h = ctx.memory_mode ? p.memory_height : p.height;
    const int boulders_base = ctx.memory_mode ? p.memory_boulders : p.boulders;
    state.terrain = GridLayout(w, h, Tile::kDirt);
    for (int x = 0; x < w; ++x) {
      state.terrain.at(x, 0) = state.terrain.at(x, h - 1) = Tile::kWall;
    }
    for (int y = 0; y < h; ++y) {
      state.terrain.at(0, y) = state.terrain.at(w - 1, y) = Tile::kWall;
    }
    state.items = Grid<Item>(w, h);
    state.flags = Grid<uint8_t>(w, h, 0);

    RngStream place = ctx.Stream("placement");
    const Cell start = *PickCell(place, w, h, [&](int x, int y) {
      return state.terrain.at(x, y) == Tile::kDirt;
    });
    state.terrain.at(start.x, start.y) = Tile::kOpen;
    PlacePlayer(state, start);

    // Objects never spawn on or adjacent to the player.
    const auto free_spot = [&](int x, int y) {
      return state.terrain.at(x, y) == Tile::kDirt && state.items.at(x, y) == Item::kNone &&
             (std::abs(x - start.x) > 1 || std::abs(y - start.y) > 1);
    };
    auto put = [&](Item item) {
      const auto c = PickCell(place, w, h, free_spot);
      if (!c) Fail(ErrorKind::kGeneration, "miner board too full");
      state.terrain.at(c->x, c->y) = Tile::kOpen;
      state.items.at(c->x, c->y) = item;
    };
    put(Item::kExit);
    for (int i = 0; i < p.diamonds; ++i) put(Item::kDiamond);
    const int boulders = boulders_base + place.Range(-p.boulder_jitter, p.boulder_jitter);
    for (int i = 0; i < boulders; ++i) put(Item::kBoulder);
    state.goal_total = state.goal_remaining = p.diamonds;
    // Boulders can seal a diamond in a corner; only search-verified boards ship.
    if (Solve(state).verdict != Verdict::kSolvable) {
      Fail(ErrorKind::kGeneration, "miner board has no verified route");
    }
  }

  TickOutcome Tick(GameState& state, Intent intent) const override {
    const MinerParams& p = state.tables().miner;
    const Cell d = GridMove(intent);
    Board b = ToBoard(state);
    const BoardStep step = StepBoard(b, d.x, d.y);
    FromBoard(b, state);
    TickOutcome out;
    out.reward = step.diamonds * p.diamond_reward;
    if (step.complete) {
      out.reward += p.completion_reward;
      out.level_complete = true;
    } else if (step.dead) {
      state.player.alive = false;
      out.failed = true;
    }
    return out;
  }

  // Weighted best-first search over full boards with the real dynamics.
  SolveResult Solve(const GameState& fresh) const override {
    SolveResult result;
    struct Node {
      Board board;
      int32_t parent;
      int8_t move;
      int32_t g;
    };
    std::vector<Node> nodes;
    using Entry = std::pair<int64_t, int32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::unordered_set<uint64_t> seen;

    const auto heuristic = [](const Board& b) {
      int best = b.w + b.h;
      const int want = b.remaining > 0 ? kDiamond : kExitCode;
      for (int y = 0; y < b.h; ++y) {
        for (int x = 0; x < b.w; ++x) {
          if (b.base(x, y) == want) best = std::min(best, std::abs(x - b.px) + std::abs(y - b.py));
        }
      }
      return static_cast<int64_t>(b.remaining) * (b.w + b.h) + best;
    };

    nodes.push_back({ToBoard(fresh), -1, -1, 0});
    seen.insert(BoardKey(nodes[0].board));
    open.push({heuristic(nodes[0].board), 0});
    int32_t goal = -1;
    while (!open.empty() && goal < 0) {
      if (result.expanded >= kSearchBudget) break;
      const int32_t id = open.top().second;
      open.pop();
      ++result.expanded;
      for (int m = 0; m < 5; ++m) {
        Board next = nodes[id].board;
        const BoardStep step = StepBoard(next, kSearchMoves[m].x, kSearchMoves[m].y);
        if (step.dead) continue;
        if (!seen.insert(BoardKey(next)).second) continue;
        const int32_t g = nodes[id].g + 1;
        nodes.push_back({std::move(next), id, static_cast<int8_t>(m), g});
        const int32_t child = static_cast<int32_t>(nodes.size()) - 1;
        if (step.complete) {
          goal = child;
          break;
        }
        open.push({g + 3 * heuristic(nodes[child].board), child});
      }
    }
    if (goal < 0) {
      result.verdict = open.empty() ? Verdict::kUnsolvable : Verdict::kUnknown;
      return result;
    }
    for (int32_t id = goal; nodes[id].parent >= 0; id = nodes[id].parent) {
      const Cell mv = kSearchMoves[nodes[id].move];
      result.witness_actions.push_back(EncodeMove(mv.x, -mv.y));
      result.witness_path.push_back({nodes[id].board.px, nodes[id].board.py});
    }
    result.witness_path.push_back(PlayerCell(fresh));
    std::reverse(result.witness_actions.begin(), result.witness_actions.end());
    std::reverse(result.witness_path.begin(), result.witness_path.end());
    result.verdict = Verdict::kSolvable;
    return result;
  }

  View Camera(const GameState& state) const override {
    return state.memory_mode ? MemoryView(state) : FullView(state);
  }

  std::vector<LevelStat> Stats(const GameState& fresh) const override {
    int boulders = 0;
    for (Item item : fresh.items.cells()) boulders += item == Item::kBoulder;
    return {{"boulders", static_cast<double>(boulders)},
            {"diamonds", static_cast<double>(fresh.goal_total)}};
  }

  double LevelMaxReturn(const GameState& fresh) const override {
    const MinerParams& p = fresh.tables().miner;
    return fresh.goal_total * p.diamond_reward + p.completion_reward;
  }
};

}  // namespace

const Game& Miner() {
  static const MinerGame game;
  return game;
}

}  // namespace procarcade::games
