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
#include <vector>

#include "procarcade/levelgen.h"

namespace procarcade {
namespace {

bool SolidAt(const GridLayout& layout, int x, int y) {
  if (x < 0 || x >= layout.width() || y < 0) return true;
  if (y >= layout.height()) return false;
  return IsSolid(layout.at(x, y));
}

void Visit(BodyStep& step, int x, int y) {
  if (step.visited_count < 8) step.visited[step.visited_count++] = {x, y};
}

constexpr int kMaxProbeGap = 24;

}  // namespace

int ChargedImpulse(const JumpModel& model, int charge) {
  if (charge <= 0) return 0;
  const int capped = std::min(charge, model.charge_cap);
  return std::min(1 + capped / 2, model.max_impulse);
}

bool Grounded(const GridLayout& layout, const Body& body) {
  return body.y + 1 < layout.height() && SolidAt(layout, body.x, body.y + 1);
}

BodyStep StepBody(const GridLayout& layout, const JumpModel& model, Body& body,
                  int dx, bool jump_held) {
  BodyStep step;
  const bool grounded = Grounded(layout, body);
  if (model.charged) {
    if (grounded && jump_held) {
      body.charge = std::min(body.charge + 1, model.charge_cap);
    } else if (grounded && body.charge > 0) {
      body.vy = -ChargedImpulse(model, body.charge);
      body.charge = 0;
    } else if (!grounded) {
      body.charge = 0;
    }
  } else if (grounded && jump_held) {
    body.vy = -model.impulse;
  }

  if (dx != 0 && !SolidAt(layout, body.x + dx, body.y)) body.x += dx;
  Visit(step, body.x, body.y);

  if (body.vy < 0) {
    for (int i = 0; i < -body.vy; ++i) {
      if (SolidAt(layout, body.x, body.y - 1)) {
        body.vy = 0;
        break;
      }
      --body.y;
      Visit(step, body.x, body.y);
    }
  } else if (body.vy > 0) {
    for (int i = 0; i < body.vy; ++i) {
      if (SolidAt(layout, body.x, body.y + 1)) {
        body.vy = 0;
        break;
      }
      ++body.y;
      if (body.y >= layout.height()) {
        step.fell_out = true;
        return step;
      }
      Visit(step, body.x, body.y);
    }
  }

  if (Grounded(layout, body) && body.vy >= 0) {
    body.vy = 0;
  } else {
    body.vy = std::min(body.vy + 1, model.max_fall);
  }
  return step;
}

int MaxJumpGap(const JumpModel& model, int rise) {
  // Launch ledge occupies columns 0..2 with its surface on kBase; the target
  // platform starts after 'gap' empty columns.
  constexpr int kHeight = 40;
  constexpr int kBase = 28;
  const int target_surface = kBase - rise;
  if (target_surface < 2 || target_surface >= kHeight) return -1;
  int best = -1;
  for (int gap = 0; gap <= kMaxProbeGap; ++gap) {
    const int target_x0 = 3 + gap;
    GridLayout world(target_x0 + 8, kHeight, Tile::kOpen);
    for (int x = 0; x < 3; ++x) {
      for (int y = kBase; y < kHeight; ++y) world.at(x, y) = Tile::kPlatform;
    }
    for (int x = target_x0; x < target_x0 + 8; ++x) {
      for (int y = target_surface; y < kHeight; ++y) {
        world.at(x, y) = Tile::kPlatform;
      }
    }
    Body body{2, kBase - 1, 0, 0};
    bool landed = false;
    int tick = 0;
    // Charged jumps hold in place until the charge is full, then release.
    const int charge_ticks = model.charged ? model.charge_cap : 0;
    for (; tick < 200; ++tick) {
      const bool charging = tick < charge_ticks;
      const int dx = charging ? 0 : 1;
      const bool jump = model.charged ? charging : true;
      const BodyStep s = StepBody(world, model, body, dx, jump);
      if (s.fell_out) break;
      if (tick > charge_ticks && body.x >= target_x0 && Grounded(world, body)) {
        landed = true;
        break;
      }
      if (body.vy == 0 && Grounded(world, body) && body.x < target_x0 &&
          tick > charge_ticks) {
        break;  // stuck against the target wall or back on the ledge
      }
    }
    if (!landed) break;
    best = gap;
  }
  return best;
}

PlatformLevel PlatformSequence(RngStream& rng, const PlatformParams& p) {
  const bool ninja = p.game == PlatformGame::kNinja;
  const int height = p.height;
  const int bottom_row = height - 2;
  PlatformLevel level;
  level.sections = rng.Range(p.min_sections, p.max_sections);

  std::array<int, 16> gap_cache;
  gap_cache.fill(-2);
  auto max_gap = [&](int rise) {
    const int slot = rise + 8;
    if (gap_cache[slot] == -2) gap_cache[slot] = MaxJumpGap(p.jump, rise);
    return gap_cache[slot];
  };

  Platform start;
  start.x0 = 0;
  start.x1 = rng.Range(3, 4) + (ninja ? 0 : 1) - 1;
  start.surface = ninja ? bottom_row - 1 : rng.Range(bottom_row - 2, bottom_row);
  level.platforms.push_back(start);

  for (int i = 0; i < level.sections; ++i) {
    const Platform& prev = level.platforms.back();
    int rise = rng.Range(-p.max_drop, p.max_rise);
    int surface = std::clamp(prev.surface - rise, p.top_row, bottom_row);
    rise = prev.surface - surface;
    int gap = 0;
    const bool chasm = ninja || rng.Chance(p.chasm_permille);
    if (chasm) {
      int limit = max_gap(rise);
      if (limit < 1) {
        surface = prev.surface;
        rise = 0;
        limit = max_gap(0);
      }
      // Keep one column of slack below the ideal jump.
      limit = std::max(1, limit - 1);
      gap = rng.Range(1, limit);
    }
    Platform next;
    next.x0 = prev.x1 + 1 + gap;
    next.x1 = next.x0 + rng.Range(p.min_width, p.max_width) - 1;
    next.surface = surface;
    level.platforms.push_back(next);
  }

  const Platform& last = level.platforms.back();
  const int width = last.x1 + 1;
  level.layout = GridLayout(width, height, Tile::kOpen);
  for (const Platform& plat : level.platforms) {
    for (int x = plat.x0; x <= plat.x1; ++x) {
      const int y_end = ninja ? plat.surface + 1 : height;
      for (int y = plat.surface; y < y_end; ++y) {
        level.layout.at(x, y) = Tile::kPlatform;
      }
    }
  }
  level.spawn = {start.x0 + 1, start.surface - 1};
  level.goal = {last.x1, last.surface - 1};
  level.placements.push_back({PlacementKind::kGoal, level.goal, 0});

  // Obstacles sit away from platform edges so every ideal landing is clear.
  const size_t count = level.platforms.size();
  for (size_t i = 1; i < count; ++i) {
    const Platform plat = level.platforms[i];
    const int w = plat.x1 - plat.x0 + 1;
    const int row = plat.surface - 1;
    const bool final_platform = i + 1 == count;
    if (ninja) {
      if (w >= 3 && !final_platform && rng.Chance(p.bomb_permille)) {
        level.placements.push_back(
            {PlacementKind::kBomb, {rng.Range(plat.x0 + 1, plat.x1 - 1), row}, 0});
      }
      continue;
    }
    if (w >= 5 && rng.Chance(p.saw_permille)) {
      const int hi = final_platform ? plat.x1 - 3 : plat.x1 - 2;
      if (hi >= plat.x0 + 2) {
        level.placements.push_back(
            {PlacementKind::kSaw, {rng.Range(plat.x0 + 2, hi), row}, 0});
      }
    } else if (w >= 6 && rng.Chance(p.enemy_permille)) {
      const int patrol = rng.Range(2, std::min(3, w - 4));
      level.placements.push_back(
          {PlacementKind::kEnemy, {plat.x0 + 1, row}, patrol});
    } else if (w >= 4 && !final_platform && rng.Chance(p.crate_permille)) {
      const int cx = rng.Range(plat.x0 + 1, plat.x1 - 1);
      const int stack = rng.Range(1, 2);
      for (int k = 0; k < stack; ++k) {
        level.placements.push_back({PlacementKind::kCrate, {cx, row - k}, 0});
        level.layout.at(cx, row - k) = Tile::kPlatform;
      }
    }
  }

  if (ninja && p.decoy_permille > 0) {
    // Superfluous ledges sit above the reach of any charged jump from the
    // critical ledges, so they never lie on a solution.
    for (size_t i = 0; i < count; ++i) {
      if (!rng.Chance(p.decoy_permille)) continue;
      const Platform& anchor = level.platforms[i];
      Platform decoy;
      decoy.critical = false;
      decoy.surface = rng.Range(1, 2);
      decoy.x0 = std::clamp(anchor.x0 + rng.Range(-2, 2), 0, width - 1);
      decoy.x1 = std::min(width - 1, decoy.x0 + rng.Range(1, 3));
      for (int x = decoy.x0; x <= decoy.x1; ++x) {
        level.layout.at(x, decoy.surface) = Tile::kPlatform;
      }
      level.platforms.push_back(decoy);
    }
  }
  return level;
}

}  // namespace procarcade
