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
#ifndef PROCARCADE_HARNESS_BENCH_H_
#define PROCARCADE_HARNESS_BENCH_H_

#include <cstdint>

#include "json.hpp"
#include "procarcade/config.h"

namespace procarcade::harness {

struct BenchOptions {
  VecConfig config;
  int num_envs = 64;
  double seconds = 2.0;
  bool render = true;
};

struct BenchResult {
  int64_t steps = 0;  // slot-steps, summed over every slot
  double seconds = 0;
  double steps_per_second = 0;
  double steps_per_second_per_thread = 0;
  int threads = 1;
};

// Random-policy vector steps until the time budget runs out. Actions are
// drawn ahead of the timed loop.
BenchResult RunBench(const BenchOptions& options);

nlohmann::json ToJson(const BenchResult& result);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_BENCH_H_
