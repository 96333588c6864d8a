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
#ifndef PROCARCADE_RENDER_H_
#define PROCARCADE_RENDER_H_

#include <array>
#include <cstdint>
#include <span>

#include "procarcade/game.h"
#include "procarcade/state.h"

namespace procarcade {

inline constexpr int kObsSize = 64;
inline constexpr int kObsChannels = 3;
inline constexpr int kObsBytes = kObsSize * kObsSize * kObsChannels;

// Row-major RGB, 64 x 64 x 3 bytes.
using Observation = std::array<uint8_t, kObsBytes>;
using ObsView = std::span<uint8_t, kObsBytes>;

inline constexpr Rgb kMaskColor{0, 0, 0};

// Paints background, terrain, items, entities, player, HUD and the memory
// mask in that order. Every pixel is written. Integer arithmetic only.
void Render(const GameState& state, const View& view, ObsView out);

// Renders with the game's own camera.
void RenderState(const GameState& state, ObsView out);

inline Rgb PixelAt(std::span<const uint8_t, kObsBytes> obs, int x, int y) {
  const size_t i = (static_cast<size_t>(y) * kObsSize + x) * kObsChannels;
  return {obs[i], obs[i + 1], obs[i + 2]};
}

}  // namespace procarcade

#endif  // PROCARCADE_RENDER_H_
