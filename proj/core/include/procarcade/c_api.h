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
#ifndef PROCARCADE_C_API_H_
#define PROCARCADE_C_API_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PROCARCADE_OBS_HEIGHT 64
#define PROCARCADE_OBS_WIDTH 64
#define PROCARCADE_OBS_CHANNELS 3
#define PROCARCADE_OBS_BYTES (64 * 64 * 3)
#define PROCARCADE_NUM_ACTIONS 15

/* Return codes. Nonzero codes leave a message in procarcade_last_error(). */
enum {
  PROCARCADE_OK = 0,
  PROCARCADE_ERR_CONFIG = 2,
  PROCARCADE_ERR_DETERMINISM = 3,
  PROCARCADE_ERR_GENERATION = 4,
  PROCARCADE_ERR_DOMAIN = 5,
  PROCARCADE_ERR_INTERNAL = 6
};

/* done_reason values. */
enum {
  PROCARCADE_DONE_NONE = 0,
  PROCARCADE_DONE_TERMINAL = 1,
  PROCARCADE_DONE_TIMEOUT = 2,
  PROCARCADE_DONE_FAILURE = 3
};

typedef struct procarcade_info {
  uint32_t level_seed;       /* level the step was played on */
  int32_t level_complete;    /* 1 when that level was completed this step */
  int32_t levels_completed;  /* this episode, sequential mode */
  int32_t done_reason;
  double episode_return;     /* return of the episode that just ended */
} procarcade_info;

typedef struct procarcade_vec procarcade_vec;

/*
 * Config keys: env_name, num_levels, start_level, rand_seed,
 * distribution_mode (easy|hard|exploration|memory), use_sequential_levels,
 * num_threads, max_episode_steps. Unknown keys are a config error. Returns
 * NULL on failure.
 */
procarcade_vec* procarcade_vec_create(const char* const* keys, const char* const* values,
                                      size_t num_pairs, int32_t num_envs);

int32_t procarcade_vec_num_envs(const procarcade_vec* vec);

/*
 * Buffers are caller-owned: obs holds num_envs * PROCARCADE_OBS_BYTES bytes in
 * slot-major, row-major RGB order; the others hold num_envs entries. Any
 * output pointer may be NULL to skip it.
 */
int32_t procarcade_vec_step(procarcade_vec* vec, const int32_t* actions, uint8_t* obs,
                            double* rewards, uint8_t* dones, procarcade_info* infos);

int32_t procarcade_vec_observe(const procarcade_vec* vec, uint8_t* obs);

/* Per-slot simulation state hashes (num_envs entries). */
int32_t procarcade_vec_state_hashes(const procarcade_vec* vec, uint64_t* hashes);

void procarcade_vec_destroy(procarcade_vec* vec);

/* Message for the last failing call on this thread; empty when none. */
const char* procarcade_last_error(void);

#ifdef __cplusplus
}
#endif

#endif  /* PROCARCADE_C_API_H_ */
