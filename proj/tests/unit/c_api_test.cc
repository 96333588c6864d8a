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

#include <cstring>
#include <string>
#include <vector>

#include "procarcade/c_api.h"
#include "procarcade/env.h"
#include "procarcade/hash.h"
#include "procarcade/render.h"

namespace {

struct Pairs {
  std::vector<const char*> keys;
  std::vector<const char*> values;
  void Add(const char* k, const char* v) {
    keys.push_back(k);
    values.push_back(v);
  }
  procarcade_vec* Create(int n) { return procarcade_vec_create(keys.data(), values.data(), keys.size(), n); }
};

TEST(CApi, ConstantsMatchEngine) {
  EXPECT_EQ(PROCARCADE_OBS_BYTES, procarcade::kObsBytes);
  EXPECT_EQ(PROCARCADE_NUM_ACTIONS, procarcade::kNumActions);
  EXPECT_EQ(PROCARCADE_DONE_TIMEOUT, static_cast<int>(procarcade::DoneReason::kTimeout));
  EXPECT_EQ(PROCARCADE_DONE_FAILURE, static_cast<int>(procarcade::DoneReason::kFailure));
}

TEST(CApi, StepsLikeTheEngine) {
  Pairs p;
  p.Add("env_name", "heist");
  p.Add("rand_seed", "12");
  p.Add("max_episode_steps", "60");
  procarcade_vec* vec = p.Create(3);
  ASSERT_NE(vec, nullptr) << procarcade_last_error();
  EXPECT_EQ(procarcade_vec_num_envs(vec), 3);

  procarcade::EnvConfig c;
  c.game = procarcade::GameId::kHeist;
  c.rand_seed = 12;
  c.max_episode_steps = 60;
  std::vector<procarcade::Env> ref;
  for (uint32_t i = 0; i < 3; ++i) {
    ref.emplace_back(c, i);
    ref.back().Reset();
  }

  std::vector<uint8_t> obs(3 * PROCARCADE_OBS_BYTES);
  std::vector<double> rewards(3);
  std::vector<uint8_t> dones(3);
  std::vector<procarcade_info> infos(3);
  std::vector<uint64_t> hashes(3);
  int finished = 0;
  for (int t = 0; t < 200; ++t) {
    const int32_t actions[3] = {t % 9, (t * 5) % 9, 4};
    ASSERT_EQ(procarcade_vec_step(vec, actions, obs.data(), rewards.data(), dones.data(), infos.data()),
              PROCARCADE_OK);
    ASSERT_EQ(procarcade_vec_state_hashes(vec, hashes.data()), PROCARCADE_OK);
    for (int i = 0; i < 3; ++i) {
      auto [r, o] = ref[i].Step(actions[i]);
      ASSERT_EQ(rewards[i], r.reward);
      ASSERT_EQ(dones[i] != 0, r.done);
      ASSERT_EQ(infos[i].level_seed, r.info.level_seed);
      ASSERT_EQ(infos[i].done_reason, static_cast<int32_t>(r.info.reason));
      if (r.done) {
        ++finished;
        ASSERT_EQ(infos[i].episode_return, r.info.episode_return);
        o = ref[i].Reset();
      }
      ASSERT_EQ(hashes[i], procarcade::StateHash(ref[i].state()));
      ASSERT_EQ(std::memcmp(obs.data() + i * PROCARCADE_OBS_BYTES, o.data(), PROCARCADE_OBS_BYTES), 0);
    }
  }
  EXPECT_GT(finished, 0);

  std::vector<uint8_t> again(obs.size());
  EXPECT_EQ(procarcade_vec_observe(vec, again.data()), PROCARCADE_OK);
  EXPECT_EQ(again, obs);
  const int32_t actions[3] = {4, 4, 4};
  EXPECT_EQ(procarcade_vec_step(vec, actions, nullptr, nullptr, nullptr, nullptr), PROCARCADE_OK);
  procarcade_vec_destroy(vec);
}

TEST(CApi, ErrorsReportCodesAndMessages) {
  Pairs unknown;
  unknown.Add("env_name", "maze");
  unknown.Add("frame_skip", "4");
  EXPECT_EQ(unknown.Create(1), nullptr);
  EXPECT_NE(std::string(procarcade_last_error()).find("frame_skip"), std::string::npos);

  Pairs bad_game;
  bad_game.Add("env_name", "pong");
  EXPECT_EQ(bad_game.Create(1), nullptr);
  EXPECT_FALSE(std::string(procarcade_last_error()).empty());

  Pairs memory;
  memory.Add("env_name", "bigfish");
  memory.Add("distribution_mode", "memory");
  EXPECT_EQ(memory.Create(1), nullptr);

  Pairs ok;
  ok.Add("env_name", "maze");
  EXPECT_EQ(ok.Create(0), nullptr);
  procarcade_vec* vec = ok.Create(2);
  ASSERT_NE(vec, nullptr);
  EXPECT_STREQ(procarcade_last_error(), "");
  const int32_t bad[2] = {4, 99};
  EXPECT_EQ(procarcade_vec_step(vec, bad, nullptr, nullptr, nullptr, nullptr), PROCARCADE_ERR_DOMAIN);
  EXPECT_NE(std::string(procarcade_last_error()).find("99"), std::string::npos);
  EXPECT_EQ(procarcade_vec_step(vec, nullptr, nullptr, nullptr, nullptr, nullptr), PROCARCADE_ERR_DOMAIN);
  EXPECT_EQ(procarcade_vec_observe(vec, nullptr), PROCARCADE_ERR_DOMAIN);
  EXPECT_EQ(procarcade_vec_num_envs(nullptr), 0);
  procarcade_vec_destroy(vec);
  procarcade_vec_destroy(nullptr);
}

TEST(CApi, ModesParse) {
  for (const char* mode : {"easy", "hard", "exploration", "memory"}) {
    Pairs p;
    p.Add("env_name", "maze");
    p.Add("distribution_mode", mode);
    p.Add("use_sequential_levels", "false");
    p.Add("num_threads", "2");
    procarcade_vec* vec = p.Create(2);
    EXPECT_NE(vec, nullptr) << mode << ": " << procarcade_last_error();
    procarcade_vec_destroy(vec);
  }
}

}  // namespace
