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
#ifndef PROCARCADE_HARNESS_EPISODE_LOG_H_
#define PROCARCADE_HARNESS_EPISODE_LOG_H_

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "procarcade/config.h"

namespace procarcade::harness {

// First line of every log: the settings needed to replay it.
struct LogHeader {
  VecConfig config;
  int num_envs = 1;
  std::string policy;
};

// One line per slot per tick, in slot order within a tick.
struct StepRecord {
  int64_t t = 0;  // tick index since the vector environment was created
  int32_t slot = 0;
  int64_t episode = 0;  // per-slot episode counter
  int32_t action = 0;
  double reward = 0;
  bool done = false;
  uint32_t level_seed = 0;
  int32_t levels_completed = 0;
  uint64_t state_hash = 0;  // after the step, following any auto-reset
  uint64_t obs_hash = 0;
};

std::vector<ConfigPair> ConfigToPairs(const VecConfig& config);

class EpisodeLogWriter {
 public:
  // An empty path disables writing. Unopenable paths throw ErrorKind::kConfig.
  explicit EpisodeLogWriter(const std::string& path);

  void WriteHeader(const LogHeader& header);
  void Write(const StepRecord& record);
  void Flush();
  bool enabled() const { return out_.is_open(); }

 private:
  std::ofstream out_;
};

struct EpisodeLog {
  LogHeader header;
  std::vector<StepRecord> steps;
};

// Malformed or missing files throw ErrorKind::kConfig.
EpisodeLog ReadEpisodeLog(const std::string& path);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_EPISODE_LOG_H_
