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
#ifndef PROCARCADE_ACTION_H_
#define PROCARCADE_ACTION_H_

#include <array>
#include <cstdint>

namespace procarcade {

inline constexpr int kNumActions = 15;
inline constexpr int kNoopAction = 4;

// Decoded controller state. dy = +1 means up.
struct Intent {
  int8_t dx = 0;
  int8_t dy = 0;
  // 0 = none, 1 = primary special (action 9), 2..6 = auxiliary (10..14).
  int8_t special = 0;
  friend bool operator==(const Intent&, const Intent&) = default;
};

// Shared 15-way action table:
//   0 left+down   1 left        2 left+up
//   3 down        4 no-op       5 up
//   6 right+down  7 right       8 right+up
//   9 primary special, 10..14 auxiliary specials.
// Games ignore the components they do not use.
Intent DecodeAction(int action);

// Inverse for pure movement intents.
int EncodeMove(int dx, int dy);

}  // namespace procarcade

#endif  // PROCARCADE_ACTION_H_
