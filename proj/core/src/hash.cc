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
#include "procarcade/hash.h"

namespace procarcade {

uint64_t Fnv1a(std::span<const uint8_t> bytes, uint64_t h) {
  for (uint8_t b : bytes) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

Hasher& Hasher::Add(uint64_t v) {
  // Word-at-a-time FNV variant; stable across platforms.
  for (int i = 0; i < 8; ++i) {
    h_ ^= (v >> (8 * i)) & 0xFF;
    h_ *= kFnvPrime;
  }
  return *this;
}

Hasher& Hasher::AddBytes(std::span<const uint8_t> bytes) {
  h_ = Fnv1a(bytes, h_);
  return *this;
}

}  // namespace procarcade
