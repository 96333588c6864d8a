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
#include "harness/norm.h"

#include <array>
#include <string>

#include "procarcade/error.h"

namespace procarcade::harness {
namespace {

constexpr std::array<NormRow, 16> kRows = {{
    {"coinrun", 5, 10, 5, 10},
    {"starpilot", 1.5, 35, 2.5, 64},
    {"caveflyer", 2, 13.4, 3.5, 12},
    {"dodgeball", 1.5, 19, 1.5, 19},
    {"fruitbot", -0.5, 27.2, -1.5, 32.4},
    {"chaser", 0.5, 14.2, 0.5, 13},
    {"miner", 1.5, 20, 1.5, 13},
    {"jumper", 1, 10, 3, 10},
    {"leaper", 1.5, 10, 3, 10},
    {"maze", 4, 10, 5, 10},
    {"bigfish", 0, 40, 1, 40},
    {"heist", 2, 10, 3.5, 10},
    {"climber", 1, 12.6, 2, 12.6},
    {"plunder", 3, 30, 4.5, 30},
    {"ninja", 2, 10, 3.5, 10},
    {"bossfight", 0.5, 13, 0.5, 13},
}};

}  // namespace

std::span<const NormRow> NormTable() { return kRows; }

NormConstants ConstantsFor(std::string_view game, Difficulty difficulty) {
  for (const NormRow& row : kRows) {
    if (row.game != game) continue;
    return difficulty == Difficulty::kHard ? NormConstants{row.hard_min, row.hard_max}
                                           : NormConstants{row.easy_min, row.easy_max};
  }
  Fail(ErrorKind::kConfig, "no normalization constants for '" + std::string(game) + "'");
}

double NormalizedReturn(double raw_return, std::string_view game, Difficulty difficulty) {
  const NormConstants c = ConstantsFor(game, difficulty);
  return (raw_return - c.r_min) / (c.r_max - c.r_min);
}

}  // namespace procarcade::harness
