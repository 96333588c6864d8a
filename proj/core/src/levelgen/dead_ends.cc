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
#include <vector>

#include "procarcade/levelgen.h"

namespace procarcade {
namespace {

bool Open(const GridLayout& layout, int x, int y) {
  return layout.InBounds(x, y) && layout.at(x, y) != Tile::kWall;
}

int OpenDegree(const GridLayout& layout, int x, int y) {
  int degree = 0;
  for (const Cell& d : kDirs4) degree += Open(layout, x + d.x, y + d.y);
  return degree;
}

bool Interior(const GridLayout& layout, int x, int y) {
  return x > 0 && y > 0 && x < layout.width() - 1 && y < layout.height() - 1;
}

}  // namespace

GridLayout RemoveDeadEnds(GridLayout layout, RngStream& rng) {
  // A dead end is an open tile with exactly one open neighbor. Each fix
  // opens an interior wall that leads straight on to another open tile, so
  // the open set only grows and connectivity is preserved.
  std::vector<Cell> candidates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < layout.height(); ++y) {
      for (int x = 0; x < layout.width(); ++x) {
        if (layout.at(x, y) == Tile::kWall) continue;
        if (OpenDegree(layout, x, y) != 1) continue;
        candidates.clear();
        for (const Cell& d : kDirs4) {
          const int wx = x + d.x;
          const int wy = y + d.y;
          if (!Interior(layout, wx, wy) || layout.at(wx, wy) != Tile::kWall) {
            continue;
          }
          if (Open(layout, wx + d.x, wy + d.y)) candidates.push_back({wx, wy});
        }
        if (candidates.empty()) continue;
        const Cell pick = candidates[rng.NextUint(
            static_cast<uint32_t>(candidates.size()))];
        layout.at(pick.x, pick.y) = Tile::kOpen;
        changed = true;
      }
    }
  }
  return layout;
}

}  // namespace procarcade
