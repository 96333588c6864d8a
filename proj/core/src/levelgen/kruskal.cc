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
#include <numeric>
#include <string>
#include <vector>

#include "procarcade/levelgen.h"

namespace procarcade {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

struct CellEdge {
  int a;
  int b;
  Cell wall;  // tile between the two cells
};

}  // namespace

GridLayout KruskalMaze(RngStream& rng, int width_cells, int height_cells) {
  if (width_cells < kMinMazeCells || width_cells > kMaxMazeCells ||
      height_cells < kMinMazeCells || height_cells > kMaxMazeCells) {
    Fail(ErrorKind::kConfig,
         "maze size " + std::to_string(width_cells) + "x" +
             std::to_string(height_cells) + " outside 3..25");
  }
  GridLayout layout(2 * width_cells + 1, 2 * height_cells + 1, Tile::kWall);
  std::vector<CellEdge> edges;
  edges.reserve(2 * width_cells * height_cells);
  for (int cy = 0; cy < height_cells; ++cy) {
    for (int cx = 0; cx < width_cells; ++cx) {
      layout.at(2 * cx + 1, 2 * cy + 1) = Tile::kOpen;
      const int id = cy * width_cells + cx;
      if (cx + 1 < width_cells) {
        edges.push_back({id, id + 1, {2 * cx + 2, 2 * cy + 1}});
      }
      if (cy + 1 < height_cells) {
        edges.push_back({id, id + width_cells, {2 * cx + 1, 2 * cy + 2}});
      }
    }
  }
  rng.Shuffle(std::span<CellEdge>(edges));
  DisjointSet sets(width_cells * height_cells);
  for (const CellEdge& e : edges) {
    if (sets.Union(e.a, e.b)) layout.at(e.wall.x, e.wall.y) = Tile::kOpen;
  }
  return layout;
}

}  // namespace procarcade
