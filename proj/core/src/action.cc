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
#include "procarcade/action.h"

#include <string>

#include "procarcade/error.h"

namespace procarcade {

Intent DecodeAction(int action) {
  if (action < 0 || action >= kNumActions) {
    Fail(ErrorKind::kDomain, "action " + std::to_string(action) +
                                 " outside 0.." + std::to_string(kNumActions - 1));
  }
  Intent intent;
  if (action < 9) {
    intent.dx = static_cast<int8_t>(action / 3 - 1);
    intent.dy = static_cast<int8_t>(action % 3 - 1);
  } else {
    intent.special = static_cast<int8_t>(action - 8);
  }
  return intent;
}

int EncodeMove(int dx, int dy) { return (dx + 1) * 3 + (dy + 1); }

}  // namespace procarcade
