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
#include "procarcade/render.h"

#include <algorithm>
#include <array>

namespace procarcade {
namespace {

// 8x8 sprite masks, bit (v * 8 + u) set when the texel is painted.
using Mask = uint64_t;

template <typename Pred>
constexpr Mask MakeMask(Pred pred) {
  Mask m = 0;
  for (int v = 0; v < 8; ++v) {
    for (int u = 0; u < 8; ++u) {
      if (pred(2 * u - 7, 2 * v - 7, u, v)) m |= Mask{1} << (v * 8 + u);
    }
  }
  return m;
}

// Centered coordinates cu, cv are odd integers in [-7, 7].
constexpr Mask kBlock = ~Mask{0};
constexpr Mask kDisc = MakeMask([](int cu, int cv, int, int) { return cu * cu + cv * cv <= 64; });
constexpr Mask kSmallDisc = MakeMask([](int cu, int cv, int, int) { return cu * cu + cv * cv <= 26; });
constexpr Mask kRing = MakeMask([](int cu, int cv, int, int) {
  const int d = cu * cu + cv * cv;
  return d <= 64 && d >= 18;
});
constexpr Mask kRhombus = MakeMask([](int cu, int cv, int, int) {
  return (cu < 0 ? -cu : cu) + (cv < 0 ? -cv : cv) <= 8;
});
constexpr Mask kKey = MakeMask([](int, int, int u, int v) {
  return (v <= 2 && u >= 1 && u <= 3) || (v == 1 && u <= 6) || (u == 6 && v <= 3) ||
         (u == 4 && v == 3);
});
constexpr Mask kLock = MakeMask([](int, int, int u, int v) {
  return (v >= 3 && u >= 1 && u <= 6) || (v <= 2 && (u == 2 || u == 5)) || (v == 0 && u >= 2 && u <= 5);
});
constexpr Mask kStarShape = MakeMask([](int cu, int cv, int, int) {
  const int au = cu < 0 ? -cu : cu;
  const int av = cv < 0 ? -cv : cv;
  return au <= 1 || av <= 1 || au == av;
});
constexpr Mask kSawShape = MakeMask([](int cu, int cv, int u, int v) {
  const int d = cu * cu + cv * cv;
  return d <= 26 || (d <= 64 && (u + v) % 2 == 0);
});
constexpr Mask kWedge = MakeMask([](int, int, int u, int v) { return v >= 2 && u <= v; });
constexpr Mask kFramed = MakeMask([](int, int, int u, int v) {
  return u == 0 || v == 0 || u == 7 || v == 7 || u == v || u + v == 7;
});
constexpr Mask kDome = MakeMask([](int cu, int cv, int u, int v) {
  return (v <= 4 && cu * cu + (cv + 1) * (cv + 1) <= 64) || (v >= 4 && u >= 3 && u <= 4);
});
constexpr Mask kDoor = MakeMask([](int, int, int u, int v) {
  return u <= 1 || u >= 6 || v <= 1 || (u == 5 && v == 4);
});
constexpr Mask kChecker = MakeMask([](int, int, int u, int v) { return ((u / 2) + (v / 2)) % 2 == 0; });

constexpr std::array<Mask, kNumItems> kItemMasks = {
    0,           // none
    kWedge,      // cheese
    kRhombus,    // gem
    kKey, kKey, kKey,
    kLock, kLock, kLock,
    kSmallDisc,  // orb
    kStarShape,  // star
    kDisc,       // boulder
    kRhombus,    // diamond
    kDoor,       // exit
    kDisc,       // coin
    kSawShape,   // saw
    kFramed,     // crate
    kDome,       // mushroom
    kDisc,       // bomb
    kRing,       // target
    kRhombus,    // goal ship
    kDisc,       // obstacle
    kChecker,    // finish
};

constexpr std::array<Mask, kNumEntityKinds> kEntityMasks = {
    kDisc,       // enemy
    kSmallDisc,  // egg
    kDisc,       // fish
    kBlock,      // car
    kBlock,      // log
    kStarShape,  // thrown star
    kBlock,      // laser
    kDisc,       // moving obstacle
};

constexpr bool MaskBit(Mask m, int u, int v) { return (m >> (v * 8 + u)) & 1; }

struct Frame {
  ObsView out;
  void Put(int px, int py, Rgb c) {
    const size_t i = (static_cast<size_t>(py) * kObsSize + px) * kObsChannels;
    out[i] = c.r;
    out[i + 1] = c.g;
    out[i + 2] = c.b;
  }
};

// World coordinate (raw 24.8) sampled at each pixel center.
struct Sampling {
  std::array<int32_t, kObsSize> wx;
  std::array<int32_t, kObsSize> wy;
};

Sampling MakeSampling(const View& view) {
  Sampling s;
  for (int p = 0; p < kObsSize; ++p) {
    // (2p + 1) / 128 of the span, in raw units: (2p + 1) * span * 256 / 128.
    const int32_t offset = (2 * p + 1) * 2 * view.span;
    s.wx[p] = view.left.raw() + offset;
    s.wy[p] = view.top.raw() + offset;
  }
  return s;
}

int Sub(int32_t raw) { return (raw & (Fixed::kOne - 1)) >> 5; }

Rgb TileColor(const SpriteAtlas& atlas, Tile tile, int tx, int ty, int u, int v) {
  switch (tile) {
    case Tile::kOpen:
      break;
    case Tile::kWall:
    case Tile::kPlatform:
      return (u == 7 || v == 7) ? atlas.tile_shade : atlas.tiles[static_cast<int>(tile)];
    case Tile::kDirt:
      return ((u + 2 * v + tx) % 5 == 0) ? atlas.background_alt
                                         : atlas.tiles[static_cast<int>(tile)];
    case Tile::kWater:
      return (v == 2 && (u + ty) % 4 < 2) ? atlas.background_alt
                                          : atlas.tiles[static_cast<int>(tile)];
    default:
      return atlas.tiles[static_cast<int>(tile)];
  }
  bool alt = false;
  switch (atlas.pattern) {
    case BackdropPattern::kSolid: break;
    case BackdropPattern::kChecker: alt = ((tx + ty) & 1) != 0; break;
    case BackdropPattern::kStripes: alt = (ty & 1) != 0; break;
    case BackdropPattern::kDots: alt = u == 3 && v == 3; break;
  }
  return alt ? atlas.background_alt : atlas.background;
}

// Paints a world-space rectangle through an 8x8 mask stretched over it.
void PaintRect(Frame& f, const Sampling& s, FixedVec pos, Fixed w, Fixed h, Mask mask, Rgb color) {
  const int32_t x0 = pos.x.raw();
  const int32_t y0 = pos.y.raw();
  const int32_t ew = std::max(w.raw(), 1);
  const int32_t eh = std::max(h.raw(), 1);
  const auto cols_begin = std::lower_bound(s.wx.begin(), s.wx.end(), x0);
  const auto cols_end = std::lower_bound(s.wx.begin(), s.wx.end(), x0 + ew);
  const auto rows_begin = std::lower_bound(s.wy.begin(), s.wy.end(), y0);
  const auto rows_end = std::lower_bound(s.wy.begin(), s.wy.end(), y0 + eh);
  for (auto ry = rows_begin; ry != rows_end; ++ry) {
    const int py = static_cast<int>(ry - s.wy.begin());
    const int v = static_cast<int>((static_cast<int64_t>(*ry - y0) * 8) / eh);
    for (auto rx = cols_begin; rx != cols_end; ++rx) {
      const int px = static_cast<int>(rx - s.wx.begin());
      const int u = static_cast<int>((static_cast<int64_t>(*rx - x0) * 8) / ew);
      if (MaskBit(mask, u, v)) f.Put(px, py, color);
    }
  }
}

Mask PlayerMask(GameId game) {
  switch (game) {
    case GameId::kCoinRun:
    case GameId::kNinja:
    case GameId::kLeaper:
      return kFramed | kSmallDisc;
    case GameId::kCaveFlyer:
      return kRhombus;
    default:
      return kDisc;
  }
}

// Pixel whose center samples the given world coordinate, or -1.
int PixelOf(const std::array<int32_t, kObsSize>& samples, int32_t raw) {
  const auto it = std::upper_bound(samples.begin(), samples.end(), raw);
  if (it == samples.begin()) return -1;
  const int p = static_cast<int>(it - samples.begin()) - 1;
  return p;
}

}  // namespace

void Render(const GameState& state, const View& view, ObsView out) {
  Frame frame{out};
  const SpriteAtlas& atlas = state.atlas;
  const Sampling s = MakeSampling(view);
  const bool has_items = state.items.width() == state.terrain.width() &&
                         state.items.height() == state.terrain.height();

  std::array<int, kObsSize> tx;
  std::array<int, kObsSize> su;
  for (int p = 0; p < kObsSize; ++p) {
    tx[p] = s.wx[p] >> Fixed::kFracBits;
    su[p] = Sub(s.wx[p]);
  }
  for (int py = 0; py < kObsSize; ++py) {
    const int ty = s.wy[py] >> Fixed::kFracBits;
    const int v = Sub(s.wy[py]);
    for (int px = 0; px < kObsSize; ++px) {
      const int x = tx[px];
      const int u = su[px];
      if (!state.terrain.InBounds(x, ty)) {
        frame.Put(px, py, TileColor(atlas, Tile::kOpen, x, ty, u, v));
        continue;
      }
      Rgb c = TileColor(atlas, state.terrain.at(x, ty), x, ty, u, v);
      if (has_items) {
        const Item item = state.items.at(x, ty);
        if (item != Item::kNone && MaskBit(kItemMasks[static_cast<int>(item)], u, v)) {
          c = atlas.items[static_cast<int>(item)];
        }
      }
      frame.Put(px, py, c);
    }
  }

  const bool chaser_vulnerable = state.game == GameId::kChaser && state.global_timer > 0;
  for (const Entity& e : state.entities) {
    if (!e.alive) continue;
    Rgb color = atlas.entities[static_cast<int>(e.kind)];
    if (chaser_vulnerable && e.kind == EntityKind::kEnemy) color = atlas.player_alt;
    PaintRect(frame, s, e.pos, e.w, e.h, kEntityMasks[static_cast<int>(e.kind)], color);
  }

  const PlayerState& p = state.player;
  PaintRect(frame, s, p.pos, p.w, p.h, PlayerMask(state.game), atlas.player);
  if (state.game == GameId::kCaveFlyer) {
    // Nose marker 0.5 tiles ahead of the ship center along the heading.
    const int32_t cx = p.pos.x.raw() + p.w.raw() / 2 + Cos256(p.heading).raw() / 2;
    const int32_t cy = p.pos.y.raw() + p.h.raw() / 2 - Sin256(p.heading).raw() / 2;
    const int nx = PixelOf(s.wx, cx);
    const int ny = PixelOf(s.wy, cy);
    for (int dy = 0; dy < 2; ++dy) {
      for (int dx = 0; dx < 2; ++dx) {
        if (nx + dx >= 0 && nx + dx < kObsSize && ny + dy >= 0 && ny + dy < kObsSize) {
          frame.Put(nx + dx, ny + dy, atlas.player_alt);
        }
      }
    }
  }

  if (state.game == GameId::kHeist) {
    // Held keys, right to left from the top-right corner.
    for (int k = 0; k < 3; ++k) {
      if (!(p.keys & (1u << k))) continue;
      const Rgb c = atlas.items[static_cast<int>(Item::kKeyRed) + k];
      const int x0 = kObsSize - 6 * (k + 1);
      for (int py = 1; py < 5; ++py) {
        for (int px = x0; px < x0 + 4; ++px) frame.Put(px, py, c);
      }
    }
  }

  if (view.patch_mask) {
    const int half = kMemoryPatchTiles / 2;
    for (int py = 0; py < kObsSize; ++py) {
      const int dy = (s.wy[py] >> Fixed::kFracBits) - view.patch_center.y;
      for (int px = 0; px < kObsSize; ++px) {
        const int dx = tx[px] - view.patch_center.x;
        if (dx < -half || dx > half || dy < -half || dy > half) frame.Put(px, py, kMaskColor);
      }
    }
  }
}

void RenderState(const GameState& state, ObsView out) {
  Render(state, GetGame(state.game).Camera(state), out);
}

}  // namespace procarcade
