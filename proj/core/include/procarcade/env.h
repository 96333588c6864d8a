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
#ifndef PROCARCADE_ENV_H_
#define PROCARCADE_ENV_H_

#include <cstdint>
#include <utility>

#include "procarcade/game.h"
#include "procarcade/render.h"
#include "procarcade/state.h"
#include "procarcade/types.h"

namespace procarcade {

enum class DoneReason : uint8_t {
  kNone,
  kTerminal,  // level completed or player died (standard modes)
  kTimeout,
  kFailure,   // sequential mode: player failed on some level
};

struct StepInfo {
  uint32_t level_seed = 0;  // level the step was played on
  bool level_complete = false;
  double episode_return = 0;  // meaningful when done
  int32_t levels_completed = 0;
  DoneReason reason = DoneReason::kNone;
};

struct StepResult {
  double reward = 0;
  bool done = false;
  StepInfo info;
};

// Stream that picks level seeds for the episodes of environment slot 'slot'.
RngStream EpisodeStream(uint32_t rand_seed, uint32_t slot);

// Level seed for the next level. Sequential mode walks start_level + k;
// otherwise one draw from the window (or [0, 2^31) when unbounded).
uint32_t SelectLevelSeed(const EnvConfig& config, RngStream& episode_rng,
                         int32_t levels_completed);

// Single environment instance. Not thread-safe; movable between threads.
class Env {
 public:
  explicit Env(EnvConfig config, uint32_t slot = 0);

  // Starts the next episode and renders its first frame.
  void Reset(ObsView obs);
  Observation Reset();

  // Throws ErrorKind::kUsage after done, ErrorKind::kDomain for bad actions.
  StepResult Step(int action, ObsView obs);
  std::pair<StepResult, Observation> Step(int action);

  void Observe(ObsView obs) const;

  const EnvConfig& config() const { return config_; }
  const GameState& state() const { return state_; }
  GameState& mutable_state() { return state_; }
  bool done() const { return done_; }
  int64_t episodes_started() const { return episodes_; }
  void set_render(bool render) { render_ = render; }

 private:
  void StartLevel(uint32_t level_seed);

  EnvConfig config_;
  const Game* game_;
  RngStream episode_rng_;
  GameState state_;
  bool done_ = true;
  bool render_ = true;
  int64_t episodes_ = 0;
};

}  // namespace procarcade

#endif  // PROCARCADE_ENV_H_
