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
#include "harness/bench.h"

#include <chrono>
#include <vector>

#include "procarcade/action.h"
#include "procarcade/vec_env.h"

namespace procarcade::harness {

BenchResult RunBench(const BenchOptions& options) {
  VecEnv env(options.config.env, options.num_envs, options.config.num_threads);
  env.set_render(options.render);
  env.Reset();
  constexpr int kTicksPerBlock = 256;
  RngStream rng = DeriveStream(options.config.env.rand_seed, 0, "policy");
  std::vector<int32_t> actions(static_cast<size_t>(kTicksPerBlock) * options.num_envs);
  for (int32_t& a : actions) a = static_cast<int32_t>(rng.NextUint(kNumActions));

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  BenchResult result;
  result.threads = env.num_threads();
  for (int64_t j = 0; result.seconds < options.seconds; ++j) {
    const size_t offset = static_cast<size_t>(j % kTicksPerBlock) * options.num_envs;
    env.Step(std::span<const int32_t>(actions.data() + offset, options.num_envs));
    result.steps += options.num_envs;
    if (j % 16 == 15) result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
  result.steps_per_second = result.steps / result.seconds;
  result.steps_per_second_per_thread = result.steps_per_second / result.threads;
  return result;
}

nlohmann::json ToJson(const BenchResult& r) {
  return {{"steps", r.steps},
          {"seconds", r.seconds},
          {"threads", r.threads},
          {"steps_per_second", r.steps_per_second},
          {"steps_per_second_per_thread", r.steps_per_second_per_thread}};
}

}  // namespace procarcade::harness
