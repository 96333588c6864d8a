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
#include "procarcade/c_api.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "procarcade/config.h"
#include "procarcade/error.h"
#include "procarcade/vec_env.h"

struct procarcade_vec {
  std::unique_ptr<procarcade::VecEnv> env;
};

namespace {

using procarcade::ErrorKind;
using procarcade::Fail;

thread_local std::string g_last_error;

int32_t CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
    case ErrorKind::kUsage: return PROCARCADE_ERR_CONFIG;
    case ErrorKind::kDeterminism: return PROCARCADE_ERR_DETERMINISM;
    case ErrorKind::kGeneration: return PROCARCADE_ERR_GENERATION;
    case ErrorKind::kDomain:
    case ErrorKind::kArithmetic: return PROCARCADE_ERR_DOMAIN;
  }
  return PROCARCADE_ERR_INTERNAL;
}

template <typename Fn>
int32_t Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return PROCARCADE_OK;
  } catch (const procarcade::Error& e) {
    g_last_error = e.what();
    return CodeFor(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PROCARCADE_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

procarcade_vec* procarcade_vec_create(const char* const* keys, const char* const* values,
                                      size_t num_pairs, int32_t num_envs) {
  procarcade_vec* out = nullptr;
  Guard([&] {
    using namespace procarcade;
    std::vector<ConfigPair> pairs;
    for (size_t i = 0; i < num_pairs; ++i) {
      if (keys == nullptr || values == nullptr || keys[i] == nullptr || values[i] == nullptr) {
        Fail(ErrorKind::kConfig, "null config key or value");
      }
      pairs.emplace_back(keys[i], values[i]);
    }
    const VecConfig config = ParseVecConfig(pairs);
    auto vec = std::make_unique<procarcade_vec>();
    vec->env = std::make_unique<VecEnv>(config.env, num_envs, config.num_threads);
    out = vec.release();
  });
  return out;
}

int32_t procarcade_vec_num_envs(const procarcade_vec* vec) {
  return vec ? vec->env->num_envs() : 0;
}

int32_t procarcade_vec_step(procarcade_vec* vec, const int32_t* actions, uint8_t* obs,
                            double* rewards, uint8_t* dones, procarcade_info* infos) {
  return Guard([&] {
    if (vec == nullptr || actions == nullptr) Fail(ErrorKind::kDomain, "null handle or actions");
    procarcade::VecEnv& env = *vec->env;
    const size_t n = static_cast<size_t>(env.num_envs());
    env.Step(std::span<const int32_t>(actions, n));
    if (obs) std::memcpy(obs, env.observations().data(), env.observations().size());
    if (rewards) std::memcpy(rewards, env.rewards().data(), n * sizeof(double));
    if (dones) std::memcpy(dones, env.dones().data(), n);
    if (infos) {
      for (size_t i = 0; i < n; ++i) {
        const procarcade::StepInfo& s = env.infos()[i];
        infos[i] = {s.level_seed, s.level_complete ? 1 : 0, s.levels_completed,
                    static_cast<int32_t>(s.reason), s.episode_return};
      }
    }
  });
}

int32_t procarcade_vec_observe(const procarcade_vec* vec, uint8_t* obs) {
  return Guard([&] {
    if (vec == nullptr || obs == nullptr) Fail(ErrorKind::kDomain, "null handle or buffer");
    std::memcpy(obs, vec->env->observations().data(), vec->env->observations().size());
  });
}

int32_t procarcade_vec_state_hashes(const procarcade_vec* vec, uint64_t* hashes) {
  return Guard([&] {
    if (vec == nullptr || hashes == nullptr) Fail(ErrorKind::kDomain, "null handle or buffer");
    for (int i = 0; i < vec->env->num_envs(); ++i) hashes[i] = vec->env->StateHashAt(i);
  });
}

void procarcade_vec_destroy(procarcade_vec* vec) { delete vec; }

const char* procarcade_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
