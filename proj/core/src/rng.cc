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
#include "procarcade/rng.h"

#include <limits>
#include <string>

#include "procarcade/error.h"
#include "procarcade/hash.h"

namespace procarcade {

uint64_t StreamOutput(uint64_t key, uint64_t counter, uint64_t attempt) {
  const uint64_t salted = counter * 0x9E3779B97F4A7C15ULL +
                          attempt * 0xD1B54A32D192ED03ULL;
  return Mix64(key ^ Mix64(salted + 0x632BE59BD9B4E019ULL));
}

uint64_t RngStream::NextU64() { return StreamOutput(key_, counter_++, 0); }

uint32_t RngStream::NextUint(uint32_t bound) {
  if (bound == 0) Fail(ErrorKind::kDomain, "rng bound must be positive");
  const uint64_t counter = counter_++;
  if (bound == 1) return 0;
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const uint64_t limit = kMax - (kMax % bound);
  for (uint64_t attempt = 0;; ++attempt) {
    const uint64_t r = StreamOutput(key_, counter, attempt);
    if (r < limit) return static_cast<uint32_t>(r % bound);
  }
}

int32_t RngStream::Range(int32_t lo, int32_t hi) {
  if (hi < lo) {
    Fail(ErrorKind::kDomain, "empty range [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
  }
  const auto span = static_cast<uint32_t>(static_cast<int64_t>(hi) - lo + 1);
  return lo + static_cast<int32_t>(NextUint(span));
}

bool RngStream::Chance(int32_t permille) {
  return static_cast<int32_t>(NextUint(1000)) < permille;
}

RngStream DeriveStream(uint32_t global_seed, uint32_t level_seed,
                       std::string_view label) {
  if (label.empty()) Fail(ErrorKind::kDomain, "stream label must be nonempty");
  const uint64_t seeds =
      (static_cast<uint64_t>(global_seed) << 32) | level_seed;
  return RngStream(Mix64(Mix64(seeds) ^ Fnv1a(label)));
}

}  // namespace procarcade
