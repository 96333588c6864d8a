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

int WallNeighbors(const GridLayout& g, int x, int y) {
  int count = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      count += g.Get(x + dx, y + dy, Tile::kWall) == Tile::kWall;
    }
  }
  return count;
}

// Keeps only the largest 4-connected open component.
void KeepLargestComponent(GridLayout& g) {
  Grid<int32_t> label(g.width(), g.height(), -1);
  std::vector<Cell> stack;
  int best_label = -1;
  int best_size = 0;
  int next = 0;
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (g.at(x, y) == Tile::kWall || label.at(x, y) >= 0) continue;
      int size = 0;
      label.at(x, y) = next;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        ++size;
        for (const Cell& d : kDirs4) {
          const int nx = c.x + d.x;
          const int ny = c.y + d.y;
          if (!g.InBounds(nx, ny) || g.at(nx, ny) == Tile::kWall ||
              label.at(nx, ny) >= 0) {
            continue;
          }
          label.at(nx, ny) = next;
          stack.push_back({nx, ny});
        }
      }
      if (size > best_size) {
        best_size = size;
        best_label = next;
      }
      ++next;
    }
  }
  for (size_t i = 0; i < g.size(); ++i) {
    if (label[i] != best_label) g[i] = Tile::kWall;
  }
}

}  // namespace

GridLayout CellularAutomataCave(RngStream& rng, int width, int height,
                                const CaveParams& params) {
  if (width < 3 || height < 3) Fail(ErrorKind::kConfig, "cave too small");
  if (params.fill_permille <= 0 || params.fill_permille >= 1000) {
    Fail(ErrorKind::kConfig, "cave fill probability must lie in (0, 1)");
  }
  if (params.iterations < 1) Fail(ErrorKind::kConfig, "cave needs >= 1 iteration");
  GridLayout grid(width, height, Tile::kWall);
  GridLayout next(width, height, Tile::kWall);
  const int64_t total = static_cast<int64_t>(width) * height;
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    for (int y = 1; y < height - 1; ++y) {
      for (int x = 1; x < width - 1; ++x) {
        grid.at(x, y) =
            rng.Chance(params.fill_permille) ? Tile::kWall : Tile::kOpen;
      }
    }
    for (int it = 0; it < params.iterations; ++it) {
      for (int y = 1; y < height - 1; ++y) {
        for (int x = 1; x < width - 1; ++x) {
          const int walls = WallNeighbors(grid, x, y);
          const bool wall = grid.at(x, y) == Tile::kWall;
          next.at(x, y) = (wall ? walls >= params.survive : walls >= params.birth)
                              ? Tile::kWall
                              : Tile::kOpen;
        }
      }
      std::swap(grid, next);
    }
    KeepLargestComponent(grid);
    const int64_t open_permille = CountOpen(grid) * 1000 / total;
    if (open_permille >= params.min_open_permille &&
        open_permille <= params.max_open_permille) {
      return grid;
    }
  }
  Fail(ErrorKind::kGeneration, "cellular automata cave missed the open-fraction "
                               "bound on every attempt");
}

}  // namespace procarcade
