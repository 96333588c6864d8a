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
#include "procarcade/config.h"

#include <charconv>
#include <cstdint>
#include <string_view>

#include "procarcade/error.h"
#include "procarcade/vec_env.h"

namespace procarcade {
namespace {

int64_t ParseInt(std::string_view key, std::string_view value, int64_t lo, int64_t hi) {
  int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out < lo || out > hi) {
    Fail(ErrorKind::kConfig, std::string(key) + ": expected an integer in [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "], got '" + std::string(value) + "'");
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "True") return true;
  if (value == "0" || value == "false" || value == "False") return false;
  Fail(ErrorKind::kConfig, std::string(key) + ": expected a boolean, got '" + std::string(value) + "'");
}

}  // namespace

VecConfig ParseVecConfig(std::span<const ConfigPair> pairs) {
  VecConfig out;
  out.num_threads = ThreadsFromEnvironment(1);
  EnvConfig& config = out.env;
  bool sequential = false;
  std::string distribution = "hard";
  for (const auto& [key, value] : pairs) {
    if (key == "env_name") {
      const auto game = ParseGameId(value);
      if (!game) Fail(ErrorKind::kConfig, "env_name: unknown game '" + value + "'");
      config.game = *game;
    } else if (key == "num_levels") {
      config.num_levels = static_cast<uint32_t>(ParseInt(key, value, 0, UINT32_MAX));
    } else if (key == "start_level") {
      config.start_level = static_cast<uint32_t>(ParseInt(key, value, 0, UINT32_MAX));
    } else if (key == "rand_seed") {
      config.rand_seed = static_cast<uint32_t>(ParseInt(key, value, 0, UINT32_MAX));
    } else if (key == "distribution_mode") {
      distribution = value;
    } else if (key == "use_sequential_levels") {
      sequential = ParseBool(key, value);
    } else if (key == "num_threads") {
      out.num_threads = static_cast<int>(ParseInt(key, value, 1, 1024));
    } else if (key == "max_episode_steps") {
      config.max_episode_steps = static_cast<int32_t>(ParseInt(key, value, 1, INT32_MAX));
    } else {
      Fail(ErrorKind::kConfig, "unknown config key '" + key + "'");
    }
  }
  if (distribution == "easy" || distribution == "hard") {
    config.difficulty = *ParseDifficulty(distribution);
    config.mode = sequential ? Mode::kSequential : Mode::kStandard;
  } else if (distribution == "exploration" || distribution == "memory") {
    if (sequential) {
      Fail(ErrorKind::kConfig, "use_sequential_levels cannot combine with " + distribution);
    }
    config.mode = *ParseMode(distribution);
  } else {
    Fail(ErrorKind::kConfig,
         "distribution_mode: expected easy|hard|exploration|memory, got '" + distribution + "'");
  }
  config = NormalizeConfig(config);
  return out;
}

std::string DistributionModeName(const EnvConfig& config) {
  if (config.mode == Mode::kExploration || config.mode == Mode::kMemory) {
    return std::string(ModeName(config.mode));
  }
  return std::string(DifficultyName(config.difficulty));
}

}  // namespace procarcade
