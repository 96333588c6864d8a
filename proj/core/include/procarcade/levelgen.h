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
#ifndef PROCARCADE_LEVELGEN_H_
#define PROCARCADE_LEVELGEN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "procarcade/grid.h"
#include "procarcade/rng.h"

namespace procarcade {

inline constexpr int kMinMazeCells = 3;
inline constexpr int kMaxMazeCells = 25;

// Perfect maze over a w x h cell graph, expanded to (2w+1) x (2h+1) tiles:
// cell (cx, cy) lives at tile (2cx+1, 2cy+1); passages are the open tiles
// between two cells. Throws ErrorKind::kConfig for sizes outside 3..25.
GridLayout KruskalMaze(RngStream& rng, int width_cells, int height_cells);

// Opens walls until no open tile has fewer than two open 4-neighbors.
// Walls are only removed; border walls are never touched.
GridLayout RemoveDeadEnds(GridLayout layout, RngStream& rng);

struct CaveParams {
  int32_t fill_permille = 450;  // initial wall probability
  int iterations = 4;
  int birth = 5;    // open cell becomes wall with >= birth wall neighbors
  int survive = 4;  // wall stays wall with >= survive wall neighbors
  int32_t min_open_permille = 250;
  int32_t max_open_permille = 750;
  int max_attempts = 50;
};

// Cellular-automata cave. Only the largest open component survives; the
// open fraction must land in [min_open, max_open] or the grid is resampled.
// Throws ErrorKind::kGeneration when every attempt misses the bound.
GridLayout CellularAutomataCave(RngStream& rng, int width, int height,
                                const CaveParams& params);

// --- grid analysis --------------------------------------------------------

int CountOpen(const GridLayout& layout);
// Number of 4-connected components among tiles that are not kWall.
int CountOpenComponents(const GridLayout& layout);
// Passage tiles of a tile-expanded maze (exactly one odd coordinate).
int CountMazePassages(const GridLayout& layout);
int CountMazeCells(const GridLayout& layout);
// Smallest number of open 4-neighbors over all open tiles (5 if no open tile).
int MinOpenDegree(const GridLayout& layout);
// BFS distances over non-wall tiles; -1 = unreachable.
Grid<int32_t> BfsDistances(const GridLayout& layout, Cell from);
// Shortest 4-connected path of non-wall tiles, inclusive of both ends.
std::optional<std::vector<Cell>> ShortestPath(const GridLayout& layout,
                                              Cell from, Cell to);

// --- platformer kinematics --------------------------------------------------
// Bodies are tile-discrete: one column per tick horizontally, vertical speed
// in tiles per tick with unit gravity. Out-of-bounds columns and the row
// above the world are solid; falling below the world is death.

struct JumpModel {
  bool charged = false;  // Ninja: hold to charge, release to jump
  int impulse = 2;       // fixed jump impulse when not charged
  int charge_cap = 4;
  int max_impulse = 3;
  int max_fall = 2;
};

// Jump impulse for a charged jump after 'charge' held ticks; monotone
// nondecreasing and capped at model.max_impulse.
int ChargedImpulse(const JumpModel& model, int charge);

struct Body {
  int x = 0;
  int y = 0;
  int vy = 0;  // negative = rising
  int charge = 0;
  friend bool operator==(const Body&, const Body&) = default;
};

struct BodyStep {
  bool fell_out = false;
  int visited_count = 0;
  Cell visited[8];  // every tile the body occupied during the tick
};

bool Grounded(const GridLayout& layout, const Body& body);
BodyStep StepBody(const GridLayout& layout, const JumpModel& model,
                  Body& body, int dx, bool jump_held);

// Largest horizontal gap (empty columns) an ideal jump clears when the
// landing surface is 'rise' rows higher (negative = lower). Computed by
// replaying the jump in an empty world; -1 if the rise is unreachable.
int MaxJumpGap(const JumpModel& model, int rise);

// --- sequential platform generation ---------------------------------------

enum class PlatformGame : uint8_t { kCoinRun, kNinja };

struct PlatformParams {
  PlatformGame game = PlatformGame::kCoinRun;
  JumpModel jump;
  int height = 14;
  int min_sections = 3;
  int max_sections = 8;
  int min_width = 3;
  int max_width = 7;
  int max_rise = 2;
  int max_drop = 3;
  int top_row = 6;  // highest surface row a critical platform may use
  int32_t chasm_permille = 500;
  int32_t saw_permille = 250;
  int32_t enemy_permille = 250;
  int32_t crate_permille = 200;
  int32_t bomb_permille = 0;
  int32_t decoy_permille = 0;
};

struct Platform {
  int x0 = 0;
  int x1 = 0;        // inclusive
  int surface = 0;   // row of the solid top tile
  bool critical = true;
};

enum class PlacementKind : uint8_t { kSaw, kEnemy, kCrate, kBomb, kGoal };

// Declarative entity placement produced by a generator; the game binds it.
struct PlacementSpec {
  PlacementKind kind = PlacementKind::kSaw;
  Cell cell;
  int patrol_width = 0;  // enemies pace [cell.x, cell.x + patrol_width]
};

struct PlatformLevel {
  GridLayout layout;
  std::vector<Platform> platforms;  // critical ones in traversal order
  std::vector<PlacementSpec> placements;
  Cell spawn;
  Cell goal;
  int sections = 0;
};

PlatformLevel PlatformSequence(RngStream& rng, const PlatformParams& params);

// --- solvability ----------------------------------------------------------

enum class Verdict : uint8_t { kSolvable, kUnsolvable, kUnknown };

const char* VerdictName(Verdict verdict);

struct SolveResult {
  Verdict verdict = Verdict::kUnknown;
  // Action indices that complete the level from its first frame when the
  // oracle replays real dynamics; empty for abstract oracles.
  std::vector<int> witness_actions;
  // Tiles visited by the witness (or abstract path).
  std::vector<Cell> witness_path;
  int64_t expanded = 0;
};

}  // namespace procarcade

#endif  // PROCARCADE_LEVELGEN_H_
