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
#ifndef PROCARCADE_GRID_H_
#define PROCARCADE_GRID_H_

#include <cstdint>
#include <string>
#include <vector>

#include "procarcade/error.h"

namespace procarcade {

enum class Tile : uint8_t {
  kOpen,
  kWall,
  kDirt,
  kWater,
  kRoad,
  kPlatform,
  kHazard,
};

inline bool IsSolid(Tile t) { return t == Tile::kWall || t == Tile::kPlatform; }

// Static objects that sit on a tile.
enum class Item : uint8_t {
  kNone,
  kCheese,
  kGem,
  kKeyRed,
  kKeyGreen,
  kKeyBlue,
  kLockRed,
  kLockGreen,
  kLockBlue,
  kOrb,
  kStar,
  kBoulder,
  kDiamond,
  kExit,
  kCoin,
  kSaw,
  kCrate,
  kMushroom,
  kBomb,
  kTarget,
  kGoalShip,
  kObstacle,
  kFinish,
};

inline constexpr int kNumItems = static_cast<int>(Item::kFinish) + 1;

// Row-major grid; (0, 0) is the top-left cell and y grows downward.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height),
        cells_(static_cast<size_t>(width) * height, fill) {
    if (width < 0 || height < 0) Fail(ErrorKind::kDomain, "negative grid size");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return cells_.size(); }

  bool InBounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  int Index(int x, int y) const { return y * width_ + x; }

  T& at(int x, int y) { return cells_[Index(x, y)]; }
  const T& at(int x, int y) const { return cells_[Index(x, y)]; }
  // Out-of-bounds reads return 'outside'.
  T Get(int x, int y, T outside) const {
    return InBounds(x, y) ? at(x, y) : outside;
  }

  T& operator[](size_t i) { return cells_[i]; }
  const T& operator[](size_t i) const { return cells_[i]; }

  const std::vector<T>& cells() const { return cells_; }
  std::vector<T>& cells() { return cells_; }

  void Fill(T value) { cells_.assign(cells_.size(), value); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

using GridLayout = Grid<Tile>;

struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline constexpr Cell kDirs4[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// One character per tile; items override terrain when a grid is given.
std::string ToAscii(const GridLayout& layout, const Grid<Item>* items = nullptr);

}  // namespace procarcade

#endif  // PROCARCADE_GRID_H_
