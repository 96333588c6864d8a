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

#ifndef PROCARCADE_RNG_H_
#define PROCARCADE_RNG_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace procarcade {

// Counter-based generator: every output is a pure function of (key, counter),
// so streams never interfere and can be replayed from any position.
class RngStream {
 public:
  constexpr RngStream() = default;
  constexpr explicit RngStream(uint64_t key, uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

  // Raw 64-bit draw. Advances the counter by one.
  uint64_t NextU64();

  // Uniform integer in [0, bound). Advances the counter by exactly one; the
  // rejection loop draws sub-samples keyed on (counter, attempt) so the
  // result is free of modulo bias. bound == 0 throws ErrorKind::kDomain.
  uint32_t NextUint(uint32_t bound);

  // Uniform integer in [lo, hi].
  int32_t Range(int32_t lo, int32_t hi);

  // True with probability permille / 1000.
  bool Chance(int32_t permille);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = NextUint(static_cast<uint32_t>(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  uint64_t key_ = 0;
  uint64_t counter_ = 0;
};

// Stable 64-bit avalanche mixer (splitmix64 finalizer).
constexpr uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Output of a stream at (key, counter) for rejection attempt 'attempt'.
uint64_t StreamOutput(uint64_t key, uint64_t counter, uint64_t attempt);

// Derives an independent stream from a (global seed, level seed, label)
// triple. Label must be non-empty.
RngStream DeriveStream(uint32_t global_seed, uint32_t level_seed,
                       std::string_view label);

}  // namespace procarcade

#endif  // PROCARCADE_RNG_H_
