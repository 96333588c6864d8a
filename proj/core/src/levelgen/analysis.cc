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
#include <deque>
#include <vector>

#include "procarcade/levelgen.h"

namespace procarcade {

const char* VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSolvable: return "solvable";
    case Verdict::kUnsolvable: return "unsolvable";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

int CountOpen(const GridLayout& layout) {
  return static_cast<int>(std::count_if(
      layout.cells().begin(), layout.cells().end(),
      [](Tile t) { return t != Tile::kWall; }));
}

int CountOpenComponents(const GridLayout& layout) {
  Grid<uint8_t> seen(layout.width(), layout.height(), 0);
  std::vector<Cell> stack;
  int components = 0;
  for (int y = 0; y < layout.height(); ++y) {
    for (int x = 0; x < layout.width(); ++x) {
      if (layout.at(x, y) == Tile::kWall || seen.at(x, y)) continue;
      ++components;
      seen.at(x, y) = 1;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (const Cell& d : kDirs4) {
          const int nx = c.x + d.x;
          const int ny = c.y + d.y;
          if (!layout.InBounds(nx, ny) || layout.at(nx, ny) == Tile::kWall ||
              seen.at(nx, ny)) {
            continue;
          }
          seen.at(nx, ny) = 1;
          stack.push_back({nx, ny});
        }
      }
    }
  }
  return components;
}

int CountMazePassages(const GridLayout& layout) {
  int passages = 0;
  for (int y = 0; y < layout.height(); ++y) {
    for (int x = 0; x < layout.width(); ++x) {
      if (layout.at(x, y) != Tile::kWall && ((x % 2) != (y % 2))) ++passages;
    }
  }
  return passages;
}

int CountMazeCells(const GridLayout& layout) {
  int cells = 0;
  for (int y = 1; y < layout.height(); y += 2) {
    for (int x = 1; x < layout.width(); x += 2) {
      cells += layout.at(x, y) != Tile::kWall;
    }
  }
  return cells;
}

int MinOpenDegree(const GridLayout& layout) {
  int best = 5;
  for (int y = 0; y < layout.height(); ++y) {
    for (int x = 0; x < layout.width(); ++x) {
      if (layout.at(x, y) == Tile::kWall) continue;
      int degree = 0;
      for (const Cell& d : kDirs4) {
        degree += layout.Get(x + d.x, y + d.y, Tile::kWall) != Tile::kWall;
      }
      best = std::min(best, degree);
    }
  }
  return best;
}

Grid<int32_t> BfsDistances(const GridLayout& layout, Cell from) {
  Grid<int32_t> dist(layout.width(), layout.height(), -1);
  if (!layout.InBounds(from.x, from.y) || layout.at(from.x, from.y) == Tile::kWall) {
    return dist;
  }
  std::deque<Cell> queue;
  dist.at(from.x, from.y) = 0;
  queue.push_back(from);
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    for (const Cell& d : kDirs4) {
      const int nx = c.x + d.x;
      const int ny = c.y + d.y;
      if (!layout.InBounds(nx, ny) || layout.at(nx, ny) == Tile::kWall ||
          dist.at(nx, ny) >= 0) {
        continue;
      }
      dist.at(nx, ny) = dist.at(c.x, c.y) + 1;
      queue.push_back({nx, ny});
    }
  }
  return dist;
}

std::optional<std::vector<Cell>> ShortestPath(const GridLayout& layout,
                                              Cell from, Cell to) {
  const Grid<int32_t> dist = BfsDistances(layout, to);
  if (!dist.InBounds(from.x, from.y) || dist.at(from.x, from.y) < 0) {
    return std::nullopt;
  }
  std::vector<Cell> path{from};
  Cell c = from;
  while (!(c == to)) {
    for (const Cell& d : kDirs4) {
      const Cell n{c.x + d.x, c.y + d.y};
      if (dist.InBounds(n.x, n.y) && dist.at(n.x, n.y) == dist.at(c.x, c.y) - 1) {
        c = n;
        break;
      }
    }
    path.push_back(c);
  }
  return path;
}

}  // namespace procarcade
