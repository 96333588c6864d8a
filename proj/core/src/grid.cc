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
#include "procarcade/grid.h"

namespace procarcade {
namespace {

char TileChar(Tile t) {
  switch (t) {
    case Tile::kOpen: return '.';
    case Tile::kWall: return '#';
    case Tile::kDirt: return ':';
    case Tile::kWater: return '~';
    case Tile::kRoad: return '=';
    case Tile::kPlatform: return 'H';
    case Tile::kHazard: return '^';
  }
  return '?';
}

char ItemChar(Item item) {
  switch (item) {
    case Item::kNone: return 0;
    case Item::kCheese: return 'C';
    case Item::kGem: return 'G';
    case Item::kKeyRed: return 'r';
    case Item::kKeyGreen: return 'g';
    case Item::kKeyBlue: return 'b';
    case Item::kLockRed: return 'R';
    case Item::kLockGreen: return 'N';
    case Item::kLockBlue: return 'B';
    case Item::kOrb: return 'o';
    case Item::kStar: return '*';
    case Item::kBoulder: return 'O';
    case Item::kDiamond: return 'D';
    case Item::kExit: return 'E';
    case Item::kCoin: return '$';
    case Item::kSaw: return 'x';
    case Item::kCrate: return 'X';
    case Item::kMushroom: return 'M';
    case Item::kBomb: return '@';
    case Item::kTarget: return 'T';
    case Item::kGoalShip: return 'S';
    case Item::kObstacle: return '!';
    case Item::kFinish: return 'F';
  }
  return '?';
}

}  // namespace

std::string ToAscii(const GridLayout& layout, const Grid<Item>* items) {
  std::string out;
  out.reserve(static_cast<size_t>(layout.width() + 1) * layout.height());
  for (int y = 0; y < layout.height(); ++y) {
    for (int x = 0; x < layout.width(); ++x) {
      char c = TileChar(layout.at(x, y));
      if (items != nullptr && items->InBounds(x, y)) {
        if (char ic = ItemChar(items->at(x, y)); ic != 0) c = ic;
      }
      out += c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace procarcade
