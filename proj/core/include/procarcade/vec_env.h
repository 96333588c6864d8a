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
#ifndef PROCARCADE_VEC_ENV_H_
#define PROCARCADE_VEC_ENV_H_

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "procarcade/env.h"

namespace procarcade {

// Fixed pool that runs one job over [0, n) slots. Slot i always goes to
// worker i % threads, so results never depend on scheduling.
class WorkerPool {
 public:
  explicit WorkerPool(int threads);
  ~WorkerPool();
  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  int threads() const { return threads_; }
  // Calls job(i) for every i in [0, n); rethrows the first worker exception.
  void Run(int n, const std::function<void(int)>& job);

 private:
  void WorkerLoop(int worker);
  void RunShare(int worker);

  int threads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(int)>* job_ = nullptr;
  int n_ = 0;
  uint64_t generation_ = 0;
  int pending_ = 0;
  bool stop_ = false;
  std::exception_ptr error_;
};

// Threads requested by PROCARCADE_NUM_THREADS, or 'fallback'.
int ThreadsFromEnvironment(int fallback);

// n environments stepped together. Slot i derives its episode stream from
// (rand_seed, i). A finished slot resets inside the same step: its observation
// is the next episode's first frame and its info describes the finished one.
class VecEnv {
 public:
  VecEnv(const EnvConfig& config, int num_envs, int num_threads = 1);

  int num_envs() const { return static_cast<int>(envs_.size()); }
  int num_threads() const { return pool_.threads(); }

  void Reset();
  // Validates every action before any slot advances.
  void Step(std::span<const int32_t> actions);

  // Slot-major, row-major RGB: slot i occupies [i * kObsBytes, (i + 1) * kObsBytes).
  std::span<const uint8_t> observations() const { return obs_; }
  std::span<const double> rewards() const { return rewards_; }
  std::span<const uint8_t> dones() const { return dones_; }
  std::span<const StepInfo> infos() const { return infos_; }

  void set_render(bool render);
  const Env& env(int slot) const { return envs_[slot]; }
  uint64_t StateHashAt(int slot) const;

 private:
  ObsView SlotView(int slot) {
    return ObsView(obs_.data() + static_cast<size_t>(slot) * kObsBytes, kObsBytes);
  }

  std::vector<Env> envs_;
  std::vector<uint8_t> obs_;
  std::vector<double> rewards_;
  std::vector<uint8_t> dones_;
  std::vector<StepInfo> infos_;
  std::vector<int32_t> actions_;
  WorkerPool pool_;
};

}  // namespace procarcade

#endif  // PROCARCADE_VEC_ENV_H_
