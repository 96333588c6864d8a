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
#ifndef PROCARCADE_STATE_H_
#define PROCARCADE_STATE_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "procarcade/fixed.h"
#include "procarcade/grid.h"
#include "procarcade/params.h"
#include "procarcade/rng.h"
#include "procarcade/theme.h"
#include "procarcade/types.h"

namespace procarcade {

// Positions are in tile units; grid-locked kinds keep integral values.
struct Entity {
  EntityKind kind = EntityKind::kEnemy;
  FixedVec pos;
  FixedVec vel;
  Fixed w = Fixed::FromRaw(Fixed::kOne);
  Fixed h = Fixed::FromRaw(Fixed::kOne);
  int32_t timer = 0;
  int32_t a = 0;  // kind-specific: patrol origin, lane period, ...
  int32_t b = 0;  // kind-specific: patrol width, lane width, ...
  int32_t dir = 0;
  bool alive = true;

  friend bool operator==(const Entity&, const Entity&) = default;
};

struct PlayerState {
  FixedVec pos;
  FixedVec vel;
  Fixed w = Fixed::FromRaw(Fixed::kOne);
  Fixed h = Fixed::FromRaw(Fixed::kOne);
  int32_t vy = 0;      // platformers: tiles per tick, negative = rising
  int32_t charge = 0;  // Ninja jump charge
  int32_t facing = 1;
  uint8_t heading = 0;  // CaveFlyer: 256 steps per revolution
  uint32_t keys = 0;    // Heist: bit i = key color i held
  int32_t cooldown = 0;
  bool alive = true;

  int TileX() const { return pos.x.Floor(); }
  int TileY() const { return pos.y.Floor(); }

  friend bool operator==(const PlayerState&, const PlayerState&) = default;
};

// Complete simulation state of one environment instance.
struct GameState {
  GameId game = GameId::kMaze;
  Difficulty difficulty = Difficulty::kHard;
  bool memory_mode = false;
  uint32_t level_seed = 0;
  uint32_t generation_attempt = 0;

  GridLayout terrain;
  Grid<Item> items;
  Grid<uint8_t> flags;  // per-tile game flags (Miner: object is falling)
  std::vector<Entity> entities;
  PlayerState player;
  SpriteAtlas atlas;

  // In-level decisions (enemy AI, spawns) draw from this level-seed stream.
  RngStream tick_rng;

  int32_t step_count = 0;  // ticks this episode
  int32_t level_step = 0;  // ticks on the current level
  int32_t levels_completed = 0;
  double episode_return = 0;

  int32_t goal_total = 0;      // orbs, diamonds, eats needed, targets
  int32_t goal_remaining = 0;
  int32_t global_timer = 0;    // Chaser vulnerability
  double unit_reward = 0;      // Chaser per-orb value

  std::shared_ptr<const ParamSet> params;

  const GameTables& tables() const { return params->tables(difficulty); }
};

struct TickOutcome {
  double reward = 0;
  bool level_complete = false;
  bool failed = false;
};

// Stable digest of everything that influences future dynamics or pixels,
// seeded with the parameter-table digest.
uint64_t StateHash(const GameState& state);

}  // namespace procarcade

#endif  // PROCARCADE_STATE_H_
