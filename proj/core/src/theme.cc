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
#include "procarcade/theme.h"

#include "procarcade/hash.h"
#include "procarcade/rng.h"

namespace procarcade {
namespace {

Rgb RandomRgb(RngStream& rng, int lo, int hi) {
  return {static_cast<uint8_t>(rng.Range(lo, hi)),
          static_cast<uint8_t>(rng.Range(lo, hi)),
          static_cast<uint8_t>(rng.Range(lo, hi))};
}

Rgb Shift(Rgb c, int delta) {
  auto clamp = [](int v) { return static_cast<uint8_t>(v < 0 ? 0 : v > 255 ? 255 : v); };
  return {clamp(c.r + delta), clamp(c.g + delta), clamp(c.b + delta)};
}

// Goal-relevant objects keep one color in every theme.
constexpr std::array<Rgb, kNumItems> kItemColors = {{
    {0, 0, 0},        // none
    {250, 220, 60},   // cheese
    {60, 230, 250},   // gem
    {230, 50, 50},    // key red
    {50, 210, 70},    // key green
    {70, 110, 250},   // key blue
    {150, 30, 30},    // lock red
    {30, 120, 40},    // lock green
    {40, 60, 160},    // lock blue
    {250, 250, 210},  // orb
    {255, 255, 110},  // star
    {150, 125, 100},  // boulder
    {130, 245, 255},  // diamond
    {250, 150, 40},   // exit
    {255, 200, 0},    // coin
    {205, 205, 215},  // saw
    {165, 110, 50},   // crate
    {235, 60, 60},    // mushroom
    {90, 20, 110},    // bomb
    {255, 90, 90},    // target
    {80, 255, 80},    // goal ship
    {175, 175, 175},  // obstacle
    {255, 255, 255},  // finish
}};

}  // namespace

SpriteAtlas DeriveTheme(GameId game, uint32_t level_seed, int pool_size) {
  RngStream pick = DeriveStream(0, level_seed, "theme");
  SpriteAtlas atlas;
  atlas.palette_id = pool_size > 1 ? pick.NextUint(static_cast<uint32_t>(pool_size)) : 0;
  // Palette contents depend only on (game, palette id).
  RngStream rng = DeriveStream(static_cast<uint32_t>(game) + 1, atlas.palette_id, "theme");
  atlas.pattern = static_cast<BackdropPattern>(rng.NextUint(4));
  atlas.background = RandomRgb(rng, 20, 100);
  atlas.background_alt = Shift(atlas.background, rng.Range(8, 24));
  atlas.tiles[static_cast<int>(Tile::kOpen)] = atlas.background;
  atlas.tiles[static_cast<int>(Tile::kWall)] = RandomRgb(rng, 120, 210);
  const int earth = rng.Range(90, 150);
  atlas.tiles[static_cast<int>(Tile::kDirt)] = {static_cast<uint8_t>(earth),
                                                static_cast<uint8_t>(earth * 3 / 4),
                                                static_cast<uint8_t>(earth / 2)};
  atlas.tiles[static_cast<int>(Tile::kWater)] = {30, static_cast<uint8_t>(rng.Range(60, 120)),
                                                 static_cast<uint8_t>(rng.Range(170, 230))};
  const int gray = rng.Range(60, 100);
  atlas.tiles[static_cast<int>(Tile::kRoad)] = {static_cast<uint8_t>(gray),
                                                static_cast<uint8_t>(gray),
                                                static_cast<uint8_t>(gray)};
  atlas.tiles[static_cast<int>(Tile::kPlatform)] = RandomRgb(rng, 110, 200);
  atlas.tiles[static_cast<int>(Tile::kHazard)] = {240, 90, 20};
  atlas.tile_shade = Shift(atlas.tiles[static_cast<int>(Tile::kWall)], -40);
  atlas.items = kItemColors;
  atlas.entities[static_cast<int>(EntityKind::kEnemy)] = {
      static_cast<uint8_t>(rng.Range(200, 255)), static_cast<uint8_t>(rng.Range(40, 110)),
      static_cast<uint8_t>(rng.Range(40, 140))};
  atlas.entities[static_cast<int>(EntityKind::kEgg)] = {235, 235, 200};
  atlas.entities[static_cast<int>(EntityKind::kFish)] = RandomRgb(rng, 140, 250);
  atlas.entities[static_cast<int>(EntityKind::kCar)] = {
      static_cast<uint8_t>(rng.Range(180, 255)), static_cast<uint8_t>(rng.Range(30, 90)),
      static_cast<uint8_t>(rng.Range(30, 90))};
  atlas.entities[static_cast<int>(EntityKind::kLog)] = {120, static_cast<uint8_t>(rng.Range(70, 90)), 40};
  atlas.entities[static_cast<int>(EntityKind::kThrownStar)] = {230, 230, 240};
  atlas.entities[static_cast<int>(EntityKind::kLaser)] = {255, 240, 120};
  atlas.entities[static_cast<int>(EntityKind::kMovingObstacle)] = {190, 150, 150};
  atlas.player = {static_cast<uint8_t>(rng.Range(150, 255)), static_cast<uint8_t>(rng.Range(150, 255)),
                  static_cast<uint8_t>(rng.Range(150, 255))};
  atlas.player_alt = {90, 110, 255};
  return atlas;
}

SpriteAtlas SolidTheme(Rgb background) {
  SpriteAtlas atlas;
  atlas.background = background;
  atlas.background_alt = background;
  atlas.tiles.fill(background);
  atlas.tile_shade = background;
  atlas.items.fill(background);
  atlas.entities.fill(background);
  atlas.player = background;
  atlas.player_alt = background;
  return atlas;
}

uint64_t AtlasHash(const SpriteAtlas& atlas) {
  Hasher h;
  auto add = [&h](Rgb c) { h.Add(static_cast<uint64_t>(c.r) << 16 | c.g << 8 | c.b); };
  h.Add(atlas.palette_id).Add(static_cast<uint64_t>(atlas.pattern));
  add(atlas.background);
  add(atlas.background_alt);
  for (Rgb c : atlas.tiles) add(c);
  add(atlas.tile_shade);
  for (Rgb c : atlas.items) add(c);
  for (Rgb c : atlas.entities) add(c);
  add(atlas.player);
  add(atlas.player_alt);
  return h.digest();
}

}  // namespace procarcade
