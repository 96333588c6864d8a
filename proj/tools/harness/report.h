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
#ifndef PROCARCADE_HARNESS_REPORT_H_
#define PROCARCADE_HARNESS_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "procarcade/types.h"

namespace procarcade::harness {

// Finished episodes of one (game, difficulty) pair.
struct EpisodeBatch {
  std::string game;
  Difficulty difficulty = Difficulty::kHard;
  std::vector<double> returns;
};

struct GameScoreRow {
  std::string game;
  Difficulty difficulty = Difficulty::kHard;
  int64_t episodes = 0;
  double mean_return = 0;
  double mean_normalized = 0;
};

struct ScoreReport {
  std::vector<GameScoreRow> rows;  // sorted by (game, difficulty)
  // Unweighted mean of the per-row normalized means.
  double mean_normalized = 0;
};

// Batches sharing a (game, difficulty) pair are pooled. Empty batches are
// skipped; an empty report has mean 0.
ScoreReport BuildReport(std::span<const EpisodeBatch> batches);

nlohmann::json ToJson(const ScoreReport& report);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_REPORT_H_
