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
#include "harness/rollout.h"

#include <fstream>
#include <span>
#include <sstream>

#include "procarcade/action.h"
#include "procarcade/error.h"
#include "procarcade/hash.h"
#include "procarcade/vec_env.h"

namespace procarcade::harness {

uint64_t ObservationHash(const uint8_t* obs) {
  return Fnv1a(std::span<const uint8_t>(obs, kObsBytes));
}

std::vector<int32_t> ReadActionScript(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kConfig, "cannot open action script '" + path + "'");
  std::vector<int32_t> out;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0 || value >= kNumActions) {
      Fail(ErrorKind::kConfig, path + ": bad action '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

RolloutResult Rollout(const RolloutOptions& options) {
  const bool replay = options.policy == PolicyKind::kReplay;
  if (replay && options.replay == nullptr) Fail(ErrorKind::kConfig, "replay needs a log");
  const VecConfig& config = replay ? options.replay->header.config : options.config;
  const int n = replay ? options.replay->header.num_envs : options.num_envs;
  if (n < 1) Fail(ErrorKind::kConfig, "num_envs must be at least 1");
  if (replay && options.replay->steps.size() % n != 0) {
    Fail(ErrorKind::kConfig, "replay log is truncated mid-tick");
  }
  const int64_t replay_ticks = replay ? static_cast<int64_t>(options.replay->steps.size()) / n : 0;

  VecEnv env(config.env, n, config.num_threads);
  env.Reset();
  EpisodeLogWriter log(options.log_path);
  const char* policy_name = options.policy == PolicyKind::kRandom     ? "random"
                            : options.policy == PolicyKind::kScripted ? "scripted"
                                                                      : "replay";
  log.WriteHeader({config, n, policy_name});

  std::vector<RngStream> policy_rng;
  for (int i = 0; i < n; ++i) policy_rng.push_back(DeriveStream(config.env.rand_seed, i, "policy"));
  std::vector<int64_t> episode(n, 0);
  std::vector<int64_t> episode_step(n, 0);
  std::vector<int32_t> actions(n, kNoopAction);

  RolloutResult result;
  const int64_t wanted = replay ? INT64_MAX : options.episodes;
  for (int64_t t = 0; static_cast<int64_t>(result.returns.size()) < wanted; ++t) {
    if (replay && t == replay_ticks) break;
    for (int i = 0; i < n; ++i) {
      switch (options.policy) {
        case PolicyKind::kRandom:
          actions[i] = static_cast<int32_t>(policy_rng[i].NextUint(kNumActions));
          break;
        case PolicyKind::kScripted:
          actions[i] = episode_step[i] < static_cast<int64_t>(options.script.size())
                           ? options.script[episode_step[i]]
                           : kNoopAction;
          break;
        case PolicyKind::kReplay:
          actions[i] = options.replay->steps[t * n + i].action;
          break;
      }
    }
    env.Step(actions);
    ++result.ticks;
    for (int i = 0; i < n; ++i) {
      const StepInfo& info = env.infos()[i];
      StepRecord r;
      r.t = t;
      r.slot = i;
      r.episode = episode[i];
      r.action = actions[i];
      r.reward = env.rewards()[i];
      r.done = env.dones()[i] != 0;
      r.level_seed = info.level_seed;
      r.levels_completed = info.levels_completed;
      r.state_hash = env.StateHashAt(i);
      r.obs_hash = ObservationHash(env.observations().data() + static_cast<size_t>(i) * kObsBytes);
      if (replay) {
        const StepRecord& want = options.replay->steps[t * n + i];
        if (want.t != t || want.slot != i || want.reward != r.reward || want.done != r.done ||
            want.state_hash != r.state_hash || want.obs_hash != r.obs_hash) {
          log.Flush();
          Fail(ErrorKind::kDeterminism, "replay diverged at tick " + std::to_string(t) +
                                            ", slot " + std::to_string(i));
        }
      }
      log.Write(r);
      ++episode_step[i];
      if (r.done) {
        ++episode[i];
        episode_step[i] = 0;
        if (static_cast<int64_t>(result.returns.size()) < wanted) {
          result.returns.push_back(info.episode_return);
          result.levels_completed.push_back(info.levels_completed);
          ++result.levels_completed_histogram[info.levels_completed];
        }
      }
    }
  }
  log.Flush();
  const EpisodeBatch batch{std::string(GameName(config.env.game)), config.env.difficulty,
                           result.returns};
  result.report = BuildReport(std::span(&batch, 1));
  return result;
}

}  // namespace procarcade::harness
