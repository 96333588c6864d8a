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
#include "procarcade/env.h"

#include "procarcade/error.h"

namespace procarcade {

RngStream EpisodeStream(uint32_t rand_seed, uint32_t slot) {
  return DeriveStream(rand_seed, slot, "episode");
}

uint32_t SelectLevelSeed(const EnvConfig& config, RngStream& episode_rng,
                         int32_t levels_completed) {
  if (config.mode == Mode::kSequential) {
    return config.start_level + static_cast<uint32_t>(levels_completed);
  }
  if (config.num_levels == 0) return episode_rng.NextUint(1u << 31);
  return config.start_level + episode_rng.NextUint(config.num_levels);
}

Env::Env(EnvConfig config, uint32_t slot)
    : config_(NormalizeConfig(std::move(config))),
      game_(&GetGame(config_.game)),
      episode_rng_(EpisodeStream(config_.rand_seed, slot)) {}

void Env::StartLevel(uint32_t level_seed) {
  const int32_t step_count = state_.step_count;
  const int32_t completed = state_.levels_completed;
  const double episode_return = state_.episode_return;
  state_ = GenerateLevel(config_.game, config_.difficulty,
                         config_.mode == Mode::kMemory, level_seed,
                         config_.params);
  state_.step_count = step_count;
  state_.levels_completed = completed;
  state_.episode_return = episode_return;
}

void Env::Reset(ObsView obs) {
  state_ = GameState{};
  ++episodes_;
  StartLevel(SelectLevelSeed(config_, episode_rng_, 0));
  done_ = false;
  Observe(obs);
}

Observation Env::Reset() {
  Observation obs;
  Reset(ObsView(obs));
  return obs;
}

void Env::Observe(ObsView obs) const {
  if (render_) RenderState(state_, obs);
}

StepResult Env::Step(int action, ObsView obs) {
  if (done_) Fail(ErrorKind::kUsage, "step called on a finished episode; reset first");
  const Intent intent = DecodeAction(action);
  StepResult result;
  result.info.level_seed = state_.level_seed;

  const TickOutcome outcome = game_->Tick(state_, intent);
  ++state_.step_count;
  ++state_.level_step;
  result.reward = outcome.reward;
  state_.episode_return += outcome.reward;

  const bool sequential = config_.mode == Mode::kSequential;
  if (outcome.level_complete) {
    ++state_.levels_completed;
    result.info.level_complete = true;
  }
  if (outcome.level_complete && sequential) {
    if (state_.step_count >= config_.max_episode_steps) {
      result.done = true;
      result.info.reason = DoneReason::kTimeout;
    } else {
      StartLevel(SelectLevelSeed(config_, episode_rng_, state_.levels_completed));
    }
  } else if (outcome.level_complete || outcome.failed) {
    result.done = true;
    result.info.reason = sequential && outcome.failed ? DoneReason::kFailure
                                                      : DoneReason::kTerminal;
  } else if (state_.step_count >= config_.max_episode_steps) {
    result.done = true;
    result.info.reason = DoneReason::kTimeout;
  }
  done_ = result.done;
  result.info.levels_completed = state_.levels_completed;
  result.info.episode_return = state_.episode_return;
  Observe(obs);
  return result;
}

std::pair<StepResult, Observation> Env::Step(int action) {
  Observation obs;
  StepResult r = Step(action, ObsView(obs));
  return {r, obs};
}

}  // namespace procarcade
