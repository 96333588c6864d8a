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
#include "procarcade/vec_env.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "procarcade/error.h"

namespace procarcade {

WorkerPool::WorkerPool(int threads) : threads_(std::max(1, threads)) {
  for (int w = 1; w < threads_; ++w) workers_.emplace_back([this, w] { WorkerLoop(w); });
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  start_cv_.notify_all();
  for (std::thread& t : workers_) t.join();
}

void WorkerPool::RunShare(int worker) {
  try {
    for (int i = worker; i < n_; i += threads_) (*job_)(i);
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!error_) error_ = std::current_exception();
  }
}

void WorkerPool::WorkerLoop(int worker) {
  uint64_t seen = 0;
  while (true) {
    {
      std::unique_lock<std::mutex> lock(mu_);
      start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
    }
    RunShare(worker);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (--pending_ == 0) done_cv_.notify_one();
    }
  }
}

void WorkerPool::Run(int n, const std::function<void(int)>& job) {
  if (threads_ == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) job(i);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    job_ = &job;
    n_ = n;
    pending_ = threads_ - 1;
    error_ = nullptr;
    ++generation_;
  }
  start_cv_.notify_all();
  RunShare(0);
  std::exception_ptr error;
  {
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [&] { return pending_ == 0; });
    job_ = nullptr;
    error = error_;
  }
  if (error) std::rethrow_exception(error);
}

int ThreadsFromEnvironment(int fallback) {
  const char* value = std::getenv("PROCARCADE_NUM_THREADS");
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 1 || parsed > 1024) {
    Fail(ErrorKind::kConfig, std::string("PROCARCADE_NUM_THREADS must be in 1..1024, got ") + value);
  }
  return static_cast<int>(parsed);
}

VecEnv::VecEnv(const EnvConfig& config, int num_envs, int num_threads)
    : pool_(num_threads) {
  if (num_envs < 1) Fail(ErrorKind::kConfig, "num_envs must be >= 1");
  const EnvConfig normalized = NormalizeConfig(config);
  envs_.reserve(num_envs);
  for (int i = 0; i < num_envs; ++i) envs_.emplace_back(normalized, static_cast<uint32_t>(i));
  obs_.assign(static_cast<size_t>(num_envs) * kObsBytes, 0);
  rewards_.assign(num_envs, 0);
  dones_.assign(num_envs, 0);
  infos_.assign(num_envs, StepInfo{});
  Reset();
}

void VecEnv::Reset() {
  pool_.Run(num_envs(), [this](int i) {
    envs_[i].Reset(SlotView(i));
    rewards_[i] = 0;
    dones_[i] = 0;
    infos_[i] = StepInfo{};
    infos_[i].level_seed = envs_[i].state().level_seed;
  });
}

void VecEnv::Step(std::span<const int32_t> actions) {
  if (static_cast<int>(actions.size()) != num_envs()) {
    Fail(ErrorKind::kDomain, "expected " + std::to_string(num_envs()) + " actions, got " +
                                 std::to_string(actions.size()));
  }
  for (size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] < 0 || actions[i] >= kNumActions) {
      Fail(ErrorKind::kDomain, "action " + std::to_string(actions[i]) + " for slot " +
                                   std::to_string(i) + " outside 0..14");
    }
  }
  pool_.Run(num_envs(), [this, actions](int i) {
    const StepResult r = envs_[i].Step(actions[i], SlotView(i));
    rewards_[i] = r.reward;
    dones_[i] = r.done ? 1 : 0;
    infos_[i] = r.info;
    if (r.done) envs_[i].Reset(SlotView(i));
  });
}

void VecEnv::set_render(bool render) {
  for (Env& env : envs_) env.set_render(render);
}

uint64_t VecEnv::StateHashAt(int slot) const { return StateHash(envs_[slot].state()); }

}  // namespace procarcade
