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
#ifndef PROCARCADE_CONFIG_H_
#define PROCARCADE_CONFIG_H_

#include <span>
#include <string>
#include <utility>

#include "procarcade/types.h"

namespace procarcade {

// Settings shared by the C interface and the command-line flags. Keys:
// env_name, num_levels, start_level, rand_seed, distribution_mode
// (easy|hard|exploration|memory), use_sequential_levels, num_threads,
// max_episode_steps.
struct VecConfig {
  EnvConfig env;
  int num_threads = 1;
};

using ConfigPair = std::pair<std::string, std::string>;

// Unknown keys and malformed values throw ErrorKind::kConfig. Missing keys
// keep their defaults; num_threads defaults to PROCARCADE_NUM_THREADS or 1.
VecConfig ParseVecConfig(std::span<const ConfigPair> pairs);

// The distribution_mode value that reproduces config.
std::string DistributionModeName(const EnvConfig& config);

}  // namespace procarcade

#endif  // PROCARCADE_CONFIG_H_
