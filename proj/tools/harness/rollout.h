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
#ifndef PROCARCADE_HARNESS_ROLLOUT_H_
#define PROCARCADE_HARNESS_ROLLOUT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "harness/episode_log.h"
#include "harness/report.h"
#include "procarcade/config.h"

namespace procarcade::harness {

enum class PolicyKind { kRandom, kScripted, kReplay };

struct RolloutOptions {
  VecConfig config;
  int num_envs = 1;
  int64_t episodes = 1;
  PolicyKind policy = PolicyKind::kRandom;
  // kScripted: played from the first tick of every episode, then no-ops.
  std::vector<int32_t> script;
  // kReplay: actions and expected hashes; config and num_envs come from it.
  const EpisodeLog* replay = nullptr;
  std::string log_path;
};

struct RolloutResult {
  // Finished episodes in (tick, slot) order, truncated to the requested count.
  std::vector<double> returns;
  std::vector<int32_t> levels_completed;
  std::map<int32_t, int64_t> levels_completed_histogram;
  int64_t ticks = 0;
  ScoreReport report;
};

// Replay mismatches throw ErrorKind::kDeterminism naming the first divergent
// tick and slot.
RolloutResult Rollout(const RolloutOptions& options);

// Action file: whitespace-separated integers in [0, 14].
std::vector<int32_t> ReadActionScript(const std::string& path);

uint64_t ObservationHash(const uint8_t* obs);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_ROLLOUT_H_
