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
#include "procarcade/params.h"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "procarcade/error.h"
#include "procarcade/hash.h"

namespace procarcade {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kConfig, "cannot read parameter file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ReadCommon(KeyValueFile& f, const std::string& s, CommonParams& c) {
  c.theme_pool = f.GetInt(s, "theme_pool");
  if (c.theme_pool < 1) Fail(ErrorKind::kConfig, s + ".theme_pool must be >= 1");
  if (f.Has(s, "exploration_seed")) {
    c.exploration_seed = static_cast<uint32_t>(f.GetInt(s, "exploration_seed"));
  }
}

void ReadPlatforms(KeyValueFile& f, const std::string& s, PlatformParams& p) {
  p.height = f.GetInt(s, "height");
  p.min_sections = f.GetInt(s, "min_sections");
  p.max_sections = f.GetInt(s, "max_sections");
  p.min_width = f.GetInt(s, "min_width");
  p.max_width = f.GetInt(s, "max_width");
  p.max_rise = f.GetInt(s, "max_rise");
  p.max_drop = f.GetInt(s, "max_drop");
  p.top_row = f.GetInt(s, "top_row");
  p.jump.max_fall = f.GetInt(s, "max_fall");
  if (p.min_sections < 1 || p.max_sections < p.min_sections ||
      p.min_width < 1 || p.max_width < p.min_width || p.top_row < 1 ||
      p.top_row >= p.height - 2) {
    Fail(ErrorKind::kConfig, "inconsistent platform table in [" + s + "]");
  }
}

GameTables ReadTables(KeyValueFile& f) {
  GameTables t;
  {
    auto& m = t.maze;
    ReadCommon(f, "maze", m.common);
    m.min_cells = f.GetInt("maze", "min_cells");
    m.max_cells = f.GetInt("maze", "max_cells");
    m.memory_cells = f.GetInt("maze", "memory_cells");
    m.completion_reward = f.GetDouble("maze", "completion_reward");
  }
  {
    auto& h = t.heist;
    ReadCommon(f, "heist", h.common);
    h.min_cells = f.GetInt("heist", "min_cells");
    h.max_cells = f.GetInt("heist", "max_cells");
    h.memory_cells = f.GetInt("heist", "memory_cells");
    h.min_locks = f.GetInt("heist", "min_locks");
    h.max_locks = f.GetInt("heist", "max_locks");
    h.completion_reward = f.GetDouble("heist", "completion_reward");
    if (h.max_locks > 3) Fail(ErrorKind::kConfig, "heist supports at most 3 locks");
  }
  {
    auto& c = t.chaser;
    ReadCommon(f, "chaser", c.common);
    c.cells = f.GetInt("chaser", "cells");
    c.enemies = f.GetInt("chaser", "enemies");
    c.enemy_period = f.GetInt("chaser", "enemy_period");
    c.vulnerable_ticks = f.GetInt("chaser", "vulnerable_ticks");
    c.hatch_ticks = f.GetInt("chaser", "hatch_ticks");
    c.chase_permille = f.GetInt("chaser", "chase_permille");
    c.min_spawn_distance = f.GetInt("chaser", "min_spawn_distance");
    c.r_max = f.GetDouble("chaser", "r_max");
    c.completion_reward = f.GetDouble("chaser", "completion_reward");
  }
  {
    auto& m = t.miner;
    ReadCommon(f, "miner", m.common);
    m.width = f.GetInt("miner", "width");
    m.height = f.GetInt("miner", "height");
    m.boulders = f.GetInt("miner", "boulders");
    m.boulder_jitter = f.GetInt("miner", "boulder_jitter");
    m.diamonds = f.GetInt("miner", "diamonds");
    m.memory_width = f.GetInt("miner", "memory_width");
    m.memory_height = f.GetInt("miner", "memory_height");
    m.memory_boulders = f.GetInt("miner", "memory_boulders");
    m.diamond_reward = f.GetDouble("miner", "diamond_reward");
    m.completion_reward = f.GetDouble("miner", "completion_reward");
  }
  {
    auto& l = t.leaper;
    ReadCommon(f, "leaper", l.common);
    l.width = f.GetInt("leaper", "width");
    l.min_lanes = f.GetInt("leaper", "min_lanes");
    l.max_lanes = f.GetInt("leaper", "max_lanes");
    l.lane_jitter = f.GetInt("leaper", "lane_jitter");
    l.max_period = f.GetInt("leaper", "max_period");
    l.car_len_max = f.GetInt("leaper", "car_len_max");
    l.car_gap_min = f.GetInt("leaper", "car_gap_min");
    l.car_gap_max = f.GetInt("leaper", "car_gap_max");
    l.log_len_min = f.GetInt("leaper", "log_len_min");
    l.log_len_max = f.GetInt("leaper", "log_len_max");
    l.log_gap_min = f.GetInt("leaper", "log_gap_min");
    l.log_gap_max = f.GetInt("leaper", "log_gap_max");
    l.completion_reward = f.GetDouble("leaper", "completion_reward");
  }
  {
    auto& c = t.coinrun;
    ReadCommon(f, "coinrun", c.common);
    ReadPlatforms(f, "coinrun", c.platforms);
    c.platforms.game = PlatformGame::kCoinRun;
    c.platforms.jump.charged = false;
    c.platforms.jump.impulse = f.GetInt("coinrun", "jump_impulse");
    c.platforms.chasm_permille = f.GetInt("coinrun", "chasm_permille");
    c.platforms.saw_permille = f.GetInt("coinrun", "saw_permille");
    c.platforms.enemy_permille = f.GetInt("coinrun", "enemy_permille");
    c.platforms.crate_permille = f.GetInt("coinrun", "crate_permille");
    c.memory_sections = f.GetInt("coinrun", "memory_sections");
    c.view_tiles = f.GetInt("coinrun", "view_tiles");
    c.completion_reward = f.GetDouble("coinrun", "completion_reward");
  }
  {
    auto& n = t.ninja;
    ReadCommon(f, "ninja", n.common);
    ReadPlatforms(f, "ninja", n.platforms);
    n.platforms.game = PlatformGame::kNinja;
    n.platforms.jump.charged = true;
    n.platforms.jump.charge_cap = f.GetInt("ninja", "charge_cap");
    n.platforms.jump.max_impulse = f.GetInt("ninja", "max_impulse");
    n.platforms.bomb_permille = f.GetInt("ninja", "bomb_permille");
    n.platforms.decoy_permille = f.GetInt("ninja", "decoy_permille");
    n.star_cooldown = f.GetInt("ninja", "star_cooldown");
    n.view_tiles = f.GetInt("ninja", "view_tiles");
    n.completion_reward = f.GetDouble("ninja", "completion_reward");
  }
  {
    auto& b = t.bigfish;
    ReadCommon(f, "bigfish", b.common);
    b.world = f.GetInt("bigfish", "world");
    b.player_width = f.GetFixed("bigfish", "player_width");
    b.growth = f.GetFixed("bigfish", "growth");
    b.min_fish_width = f.GetFixed("bigfish", "min_fish_width");
    b.max_fish_width = f.GetFixed("bigfish", "max_fish_width");
    b.fish_speed_min = f.GetFixed("bigfish", "fish_speed_min");
    b.fish_speed_max = f.GetFixed("bigfish", "fish_speed_max");
    b.player_speed = f.GetFixed("bigfish", "player_speed");
    b.spawn_permille = f.GetInt("bigfish", "spawn_permille");
    b.max_fish = f.GetInt("bigfish", "max_fish");
    b.min_scale_permille = f.GetInt("bigfish", "min_scale_permille");
    b.max_scale_permille = f.GetInt("bigfish", "max_scale_permille");
    b.fish_reward = f.GetDouble("bigfish", "fish_reward");
    b.completion_reward = f.GetDouble("bigfish", "completion_reward");
    if (b.growth <= Fixed() || b.max_fish_width <= b.player_width) {
      Fail(ErrorKind::kConfig, "bigfish growth table cannot reach completion");
    }
  }
  {
    auto& c = t.caveflyer;
    ReadCommon(f, "caveflyer", c.common);
    c.width = f.GetInt("caveflyer", "width");
    c.height = f.GetInt("caveflyer", "height");
    c.memory_size = f.GetInt("caveflyer", "memory_size");
    c.cave.fill_permille = f.GetInt("caveflyer", "fill_permille");
    c.cave.iterations = f.GetInt("caveflyer", "iterations");
    c.cave.birth = f.GetInt("caveflyer", "birth");
    c.cave.survive = f.GetInt("caveflyer", "survive");
    c.min_targets = f.GetInt("caveflyer", "min_targets");
    c.max_targets = f.GetInt("caveflyer", "max_targets");
    c.obstacles = f.GetInt("caveflyer", "obstacles");
    c.moving_obstacles = f.GetInt("caveflyer", "moving_obstacles");
    c.speed = f.GetFixed("caveflyer", "speed");
    c.obstacle_speed = f.GetFixed("caveflyer", "obstacle_speed");
    c.rotate_step = f.GetInt("caveflyer", "rotate_step");
    c.laser_speed = f.GetFixed("caveflyer", "laser_speed");
    c.laser_ticks = f.GetInt("caveflyer", "laser_ticks");
    c.fire_cooldown = f.GetInt("caveflyer", "fire_cooldown");
    c.view_tiles = f.GetInt("caveflyer", "view_tiles");
    c.target_reward = f.GetDouble("caveflyer", "target_reward");
    c.goal_reward = f.GetDouble("caveflyer", "goal_reward");
    if (c.goal_reward <= c.target_reward * c.max_targets) {
      Fail(ErrorKind::kConfig,
           "caveflyer goal reward must exceed the total target reward");
    }
  }
  return t;
}

}  // namespace

KeyValueFile KeyValueFile::Parse(std::string_view text, std::string source) {
  KeyValueFile f;
  f.source_ = std::move(source);
  std::string section;
  int line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = f.source_ + ":" + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') Fail(ErrorKind::kConfig, where + ": bad section header");
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      Fail(ErrorKind::kConfig, where + ": expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      Fail(ErrorKind::kConfig, where + ": empty key or value");
    }
    auto [it, inserted] = f.values_[section].emplace(key, value);
    if (!inserted) Fail(ErrorKind::kConfig, where + ": duplicate key " + key);
  }
  return f;
}

bool KeyValueFile::Has(const std::string& section, const std::string& key) const {
  auto it = values_.find(section);
  return it != values_.end() && it->second.count(key) != 0;
}

const std::string& KeyValueFile::Raw(const std::string& section,
                                     const std::string& key) {
  auto it = values_.find(section);
  if (it == values_.end() || it->second.count(key) == 0) {
    Fail(ErrorKind::kConfig, source_ + ": missing [" + section + "] " + key);
  }
  consumed_.insert(section + "." + key);
  return it->second.at(key);
}

int KeyValueFile::GetInt(const std::string& section, const std::string& key) {
  const std::string& raw = Raw(section, key);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec != std::errc() || ptr != raw.data() + raw.size() ||
      value < -2147483648LL || value > 4294967295LL) {
    Fail(ErrorKind::kConfig, source_ + ": [" + section + "] " + key +
                                 " is not an integer: " + raw);
  }
  return static_cast<int>(value);
}

Fixed KeyValueFile::GetFixed(const std::string& section, const std::string& key) {
  return Fixed::Parse(Raw(section, key));
}

double KeyValueFile::GetDouble(const std::string& section, const std::string& key) {
  const std::string& raw = Raw(section, key);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(raw.c_str(), &end);
  if (errno != 0 || end != raw.c_str() + raw.size()) {
    Fail(ErrorKind::kConfig, source_ + ": [" + section + "] " + key +
                                 " is not a number: " + raw);
  }
  return value;
}

void KeyValueFile::Finish() const {
  for (const auto& [section, keys] : values_) {
    for (const auto& [key, value] : keys) {
      if (consumed_.count(section + "." + key) == 0) {
        Fail(ErrorKind::kConfig, source_ + ": unknown key [" + section + "] " + key);
      }
    }
  }
}

const CommonParams& GameTables::Common(GameId game) const {
  switch (game) {
    case GameId::kBigFish: return bigfish.common;
    case GameId::kCaveFlyer: return caveflyer.common;
    case GameId::kChaser: return chaser.common;
    case GameId::kCoinRun: return coinrun.common;
    case GameId::kHeist: return heist.common;
    case GameId::kLeaper: return leaper.common;
    case GameId::kMaze: return maze.common;
    case GameId::kMiner: return miner.common;
    case GameId::kNinja: return ninja.common;
  }
  return maze.common;
}

std::shared_ptr<const ParamSet> ParamSet::FromText(std::string_view easy,
                                                   std::string_view hard) {
  auto set = std::make_shared<ParamSet>();
  KeyValueFile easy_file = KeyValueFile::Parse(easy, "easy.params");
  KeyValueFile hard_file = KeyValueFile::Parse(hard, "hard.params");
  const int easy_version = easy_file.GetInt("", "version");
  const int hard_version = hard_file.GetInt("", "version");
  if (easy_version != hard_version) {
    Fail(ErrorKind::kConfig, "easy and hard parameter versions differ");
  }
  set->version_ = easy_version;
  set->easy_ = ReadTables(easy_file);
  set->hard_ = ReadTables(hard_file);
  easy_file.Finish();
  hard_file.Finish();
  set->digest_ = Fnv1a(hard, Fnv1a(easy));
  return set;
}

std::shared_ptr<const ParamSet> ParamSet::FromFiles(const std::string& easy_path,
                                                    const std::string& hard_path) {
  return FromText(ReadFile(easy_path), ReadFile(hard_path));
}

std::shared_ptr<const ParamSet> ParamSet::Default() {
  static const std::shared_ptr<const ParamSet> tables =
      FromText(EmbeddedParamsText(Difficulty::kEasy),
               EmbeddedParamsText(Difficulty::kHard));
  return tables;
}

}  // namespace procarcade
