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
#ifndef PROCARCADE_THEME_H_
#define PROCARCADE_THEME_H_

#include <array>
#include <cstdint>

#include "procarcade/grid.h"
#include "procarcade/types.h"

namespace procarcade {

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

enum class EntityKind : uint8_t {
  kEnemy,
  kEgg,
  kFish,
  kCar,
  kLog,
  kThrownStar,
  kLaser,
  kMovingObstacle,
};

inline constexpr int kNumEntityKinds = static_cast<int>(EntityKind::kMovingObstacle) + 1;

enum class BackdropPattern : uint8_t { kSolid, kChecker, kStripes, kDots };

// Colors for every drawable kind plus the backdrop, chosen per level from
// the "theme" stream. Goal-critical items keep fixed colors.
struct SpriteAtlas {
  uint32_t palette_id = 0;
  BackdropPattern pattern = BackdropPattern::kSolid;
  Rgb background;
  Rgb background_alt;
  std::array<Rgb, 7> tiles;  // indexed by Tile
  Rgb tile_shade;            // second color for textured tiles
  std::array<Rgb, kNumItems> items;
  std::array<Rgb, kNumEntityKinds> entities;
  Rgb player;
  Rgb player_alt;  // Chaser vulnerable enemies, Heist HUD frame

  friend bool operator==(const SpriteAtlas&, const SpriteAtlas&) = default;
};

// Pure function of (game, level seed, pool size).
SpriteAtlas DeriveTheme(GameId game, uint32_t level_seed, int pool_size);

// Solid backdrop, no decoration; used by tests and debugging.
SpriteAtlas SolidTheme(Rgb background);

uint64_t AtlasHash(const SpriteAtlas& atlas);

}  // namespace procarcade

#endif  // PROCARCADE_THEME_H_
