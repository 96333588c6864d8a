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
#ifndef PROCARCADE_HARNESS_GENSTATS_H_
#define PROCARCADE_HARNESS_GENSTATS_H_

#include <cstdint>
#include <span>
#include <string>

#include "json.hpp"
#include "procarcade/types.h"

namespace procarcade::harness {

struct GenStatsOptions {
  GameId game = GameId::kMaze;
  Difficulty difficulty = Difficulty::kHard;
  bool memory_mode = false;
  uint32_t start_seed = 0;
  int64_t seeds = 1000;
  // When non-empty, the first dump_count levels are written here as ASCII and PNG.
  std::string dump_dir;
  int dump_count = 0;
};

// Solvability verdict counts, layout statistics with pairwise correlations,
// and a regenerate-and-compare reproducibility count.
nlohmann::json GenStats(const GenStatsOptions& options);

// Pearson correlation; 0 when either side is constant.
double Correlation(std::span<const double> a, std::span<const double> b);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_GENSTATS_H_
