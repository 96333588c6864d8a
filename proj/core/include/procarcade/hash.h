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

#ifndef PROCARCADE_HASH_H_
#define PROCARCADE_HASH_H_

#include <cstdint>
#include <span>
#include <string_view>

namespace procarcade {

constexpr uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001B3ULL;

constexpr uint64_t Fnv1a(std::string_view text, uint64_t h = kFnvOffset) {
  for (char c : text) {
    h ^= static_cast<uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

uint64_t Fnv1a(std::span<const uint8_t> bytes, uint64_t h = kFnvOffset);

// Incremental hasher over integral fields. Field order matters.
class Hasher {
 public:
  Hasher& Add(uint64_t v);
  Hasher& AddSigned(int64_t v) { return Add(static_cast<uint64_t>(v)); }
  Hasher& AddBytes(std::span<const uint8_t> bytes);
  uint64_t digest() const { return h_; }

 private:
  uint64_t h_ = kFnvOffset;
};

}  // namespace procarcade

#endif  // PROCARCADE_HASH_H_
