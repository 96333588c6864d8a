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
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "procarcade/error.h"
#include "procarcade/game.h"
#include "procarcade/rng.h"

namespace procarcade {
namespace {

TEST(RngStream, BoundOneAlwaysZero) {
  RngStream rng = DeriveStream(1, 2, "layout");
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(rng.NextUint(1), 0u);
}

TEST(RngStream, DrawDependsOnlyOnKeyAndCounter) {
  RngStream a(0x1234, 77);
  RngStream b(0x1234, 77);
  EXPECT_EQ(a.NextUint(10), b.NextUint(10));
  EXPECT_EQ(a, b);
}

TEST(RngStream, EveryDrawAdvancesCounterByOne) {
  RngStream rng(99, 0);
  for (uint32_t bound : {1u, 2u, 3u, 1000u, 0x80000001u, 0xFFFFFFFFu}) {
    const uint64_t before = rng.counter();
    rng.NextUint(bound);
    EXPECT_EQ(rng.counter(), before + 1);
  }
}

TEST(RngStream, ZeroBoundIsDomainError) {
  RngStream rng(5);
  try {
    rng.NextUint(0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(RngStream, DrawsStayBelowAwkwardBounds) {
  RngStream rng(3);
  // Just above a power of two maximizes the rejection rate.
  for (int i = 0; i < 20000; ++i) EXPECT_LT(rng.NextUint(0x80000001u), 0x80000001u);
  for (int i = 0; i < 20000; ++i) EXPECT_LT(rng.NextUint(7), 7u);
}

TEST(RngStream, ChiSquareUniformAtBound25) {
  // 24 degrees of freedom; 99.9% critical value 51.179.
  constexpr int kBound = 25;
  constexpr int kDraws = 1'000'000;
  RngStream rng = DeriveStream(2024, 7, "layout");
  std::vector<int64_t> counts(kBound, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[rng.NextUint(kBound)];
  const double expected = static_cast<double>(kDraws) / kBound;
  double chi2 = 0;
  for (int64_t c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 51.179);
}

TEST(RngStream, RangeIsInclusiveAndCoversEnds) {
  RngStream rng(11);
  std::set<int32_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const int32_t v = rng.Range(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(RngStream, ChanceExtremes) {
  RngStream rng(12);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(rng.Chance(0));
    EXPECT_TRUE(rng.Chance(1000));
  }
}

TEST(RngStream, ShuffleIsAPermutation) {
  RngStream rng(13);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  rng.Shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
  EXPECT_NE(v, sorted);
}

TEST(DeriveStream, SameTripleSameKey) {
  EXPECT_EQ(DeriveStream(4, 5, "theme").key(), DeriveStream(4, 5, "theme").key());
  EXPECT_EQ(DeriveStream(4, 5, "theme").counter(), 0u);
}

TEST(DeriveStream, NoKeyCollisionsAcrossLabelsAndSeeds) {
  // Every shipped label under 10^4 level seeds and two global seeds.
  std::set<uint64_t> keys;
  size_t total = 0;
  for (uint32_t global : {0u, 1u}) {
    for (uint32_t seed = 0; seed < 10000; ++seed) {
      for (std::string_view label : kStreamLabels) {
        keys.insert(DeriveStream(global, seed, label).key());
        ++total;
      }
    }
  }
  EXPECT_EQ(keys.size(), total);
}

TEST(DeriveStream, LabelsGiveUncorrelatedOutputs) {
  // Matching positions of two label streams should agree about 1/bound of the time.
  RngStream a = DeriveStream(0, 42, "layout");
  RngStream b = DeriveStream(0, 42, "theme");
  int same = 0;
  for (int i = 0; i < 100000; ++i) same += a.NextUint(10) == b.NextUint(10);
  EXPECT_NEAR(same / 100000.0, 0.1, 0.01);
}

TEST(DeriveStream, GlobalAndLevelSeedsAreNotInterchangeable) {
  EXPECT_NE(DeriveStream(1, 2, "layout").key(), DeriveStream(2, 1, "layout").key());
}

}  // namespace
}  // namespace procarcade
