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
#ifndef PROCARCADE_HARNESS_NORM_H_
#define PROCARCADE_HARNESS_NORM_H_

#include <span>
#include <string_view>

#include "procarcade/types.h"

namespace procarcade::harness {

struct NormRow {
  std::string_view game;
  double hard_min;
  double hard_max;
  double easy_min;
  double easy_max;
};

// Published per-game return constants, all sixteen environments, including
// the seven not simulated here.
std::span<const NormRow> NormTable();

struct NormConstants {
  double r_min = 0;
  double r_max = 0;
};

// Unknown game names throw ErrorKind::kConfig.
NormConstants ConstantsFor(std::string_view game, Difficulty difficulty);

// (R - R_min) / (R_max - R_min), deliberately unclamped.
double NormalizedReturn(double raw_return, std::string_view game, Difficulty difficulty);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_NORM_H_
