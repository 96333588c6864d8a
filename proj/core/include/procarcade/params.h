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
#ifndef PROCARCADE_PARAMS_H_
#define PROCARCADE_PARAMS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "procarcade/fixed.h"
#include "procarcade/levelgen.h"
#include "procarcade/types.h"

namespace procarcade {

// Parsed "[section] key = value" text with '#' comments. Every key must be
// consumed by a typed getter; Finish() reports leftovers as config errors.
class KeyValueFile {
 public:
  static KeyValueFile Parse(std::string_view text, std::string source);

  int GetInt(const std::string& section, const std::string& key);
  Fixed GetFixed(const std::string& section, const std::string& key);
  double GetDouble(const std::string& section, const std::string& key);
  bool Has(const std::string& section, const std::string& key) const;
  void Finish() const;

 private:
  const std::string& Raw(const std::string& section, const std::string& key);

  std::string source_;
  std::map<std::string, std::map<std::string, std::string>> values_;
  std::set<std::string> consumed_;
};

struct CommonParams {
  int theme_pool = 8;
  uint32_t exploration_seed = 0;
};

struct MazeParams {
  CommonParams common;
  int min_cells = 3;
  int max_cells = 25;
  int memory_cells = 25;
  double completion_reward = 10;
};

struct HeistParams {
  CommonParams common;
  int min_cells = 4;
  int max_cells = 11;
  int memory_cells = 15;
  int min_locks = 0;
  int max_locks = 3;
  double completion_reward = 10;
};

struct ChaserParams {
  CommonParams common;
  int cells = 9;
  int enemies = 4;
  int enemy_period = 2;
  int vulnerable_ticks = 40;
  int hatch_ticks = 30;
  int chase_permille = 700;
  int min_spawn_distance = 8;
  double r_max = 14.2;
  double completion_reward = 10;
};

struct MinerParams {
  CommonParams common;
  int width = 16;
  int height = 16;
  int boulders = 22;
  int boulder_jitter = 4;
  int diamonds = 10;
  int memory_width = 24;
  int memory_height = 24;
  int memory_boulders = 40;
  double diamond_reward = 1;
  double completion_reward = 10;
};

struct LeaperParams {
  CommonParams common;
  int width = 12;
  int min_lanes = 1;
  int max_lanes = 5;
  int lane_jitter = 1;
  int max_period = 3;
  int car_len_max = 2;
  int car_gap_min = 2;
  int car_gap_max = 5;
  int log_len_min = 2;
  int log_len_max = 4;
  int log_gap_min = 1;
  int log_gap_max = 3;
  double completion_reward = 10;
};

struct CoinRunParams {
  CommonParams common;
  PlatformParams platforms;
  int memory_sections = 12;
  int view_tiles = 16;
  double completion_reward = 10;
};

struct NinjaParams {
  CommonParams common;
  PlatformParams platforms;
  int star_cooldown = 3;
  int view_tiles = 16;
  double completion_reward = 10;
};

struct BigFishParams {
  CommonParams common;
  int world = 16;
  Fixed player_width = Fixed::FromRaw(256);
  Fixed growth = Fixed::FromRaw(26);
  Fixed min_fish_width = Fixed::FromRaw(64);
  Fixed max_fish_width = Fixed::FromRaw(1024);
  Fixed fish_speed_min = Fixed::FromRaw(32);
  Fixed fish_speed_max = Fixed::FromRaw(96);
  Fixed player_speed = Fixed::FromRaw(128);
  int spawn_permille = 150;
  int max_fish = 14;
  int min_scale_permille = 375;
  int max_scale_permille = 1500;
  double fish_reward = 1;
  double completion_reward = 10;
};

struct CaveFlyerParams {
  CommonParams common;
  int width = 40;
  int height = 40;
  int memory_size = 60;
  CaveParams cave;
  int min_targets = 3;
  int max_targets = 4;
  int obstacles = 6;
  int moving_obstacles = 3;
  Fixed speed = Fixed::FromRaw(64);
  Fixed obstacle_speed = Fixed::FromRaw(32);
  int rotate_step = 8;
  Fixed laser_speed = Fixed::FromRaw(256);
  int laser_ticks = 12;
  int fire_cooldown = 4;
  int view_tiles = 16;
  double target_reward = 1;
  double goal_reward = 10;
};

// Per-difficulty parameter table for every game.
struct GameTables {
  MazeParams maze;
  HeistParams heist;
  ChaserParams chaser;
  MinerParams miner;
  LeaperParams leaper;
  CoinRunParams coinrun;
  NinjaParams ninja;
  BigFishParams bigfish;
  CaveFlyerParams caveflyer;

  const CommonParams& Common(GameId game) const;
};

class ParamSet {
 public:
  // Built-in tables compiled from core/data/{easy,hard}.params.
  static std::shared_ptr<const ParamSet> Default();
  static std::shared_ptr<const ParamSet> FromText(std::string_view easy,
                                                  std::string_view hard);
  static std::shared_ptr<const ParamSet> FromFiles(const std::string& easy_path,
                                                   const std::string& hard_path);

  const GameTables& tables(Difficulty difficulty) const {
    return difficulty == Difficulty::kEasy ? easy_ : hard_;
  }
  int version() const { return version_; }
  // FNV-1a over both source texts; feeds every state hash.
  uint64_t digest() const { return digest_; }

 private:
  GameTables easy_;
  GameTables hard_;
  int version_ = 0;
  uint64_t digest_ = 0;
};

// Source text of the built-in tables.
std::string_view EmbeddedParamsText(Difficulty difficulty);

}  // namespace procarcade

#endif  // PROCARCADE_PARAMS_H_
