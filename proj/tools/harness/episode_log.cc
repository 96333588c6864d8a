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
#include "harness/episode_log.h"

#include <cstdio>
#include <string>

#include "json.hpp"
#include "procarcade/error.h"

namespace procarcade::harness {
namespace {

std::string Hex(uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

uint64_t FromHex(const std::string& text) {
  size_t used = 0;
  const uint64_t v = std::stoull(text, &used, 16);
  if (used != text.size()) Fail(ErrorKind::kConfig, "bad hash '" + text + "'");
  return v;
}

}  // namespace

std::vector<ConfigPair> ConfigToPairs(const VecConfig& config) {
  const EnvConfig& c = config.env;
  return {
      {"env_name", std::string(GameName(c.game))},
      {"num_levels", std::to_string(c.num_levels)},
      {"start_level", std::to_string(c.start_level)},
      {"rand_seed", std::to_string(c.rand_seed)},
      {"distribution_mode", DistributionModeName(c)},
      {"use_sequential_levels", c.mode == Mode::kSequential ? "1" : "0"},
      {"num_threads", std::to_string(config.num_threads)},
      {"max_episode_steps", std::to_string(c.max_episode_steps)},
  };
}

EpisodeLogWriter::EpisodeLogWriter(const std::string& path) {
  if (path.empty()) return;
  out_.open(path, std::ios::out | std::ios::trunc);
  if (!out_) Fail(ErrorKind::kConfig, "cannot open log '" + path + "' for writing");
}

void EpisodeLogWriter::WriteHeader(const LogHeader& header) {
  if (!enabled()) return;
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : ConfigToPairs(header.config)) config[key] = value;
  out_ << nlohmann::json{{"config", config}, {"num_envs", header.num_envs}, {"policy", header.policy}}
              .dump()
       << '\n';
}

void EpisodeLogWriter::Write(const StepRecord& r) {
  if (!enabled()) return;
  out_ << nlohmann::json{{"t", r.t},
                         {"slot", r.slot},
                         {"episode", r.episode},
                         {"action", r.action},
                         {"reward", r.reward},
                         {"done", r.done},
                         {"level_seed", r.level_seed},
                         {"levels_completed", r.levels_completed},
                         {"state_hash", Hex(r.state_hash)},
                         {"obs_hash", Hex(r.obs_hash)}}
              .dump()
       << '\n';
}

void EpisodeLogWriter::Flush() {
  if (enabled()) out_.flush();
}

EpisodeLog ReadEpisodeLog(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kConfig, "cannot open log '" + path + "'");
  EpisodeLog log;
  std::string line;
  int64_t line_no = 0;
  try {
    if (!std::getline(in, line)) Fail(ErrorKind::kConfig, "empty log '" + path + "'");
    ++line_no;
    const nlohmann::json header = nlohmann::json::parse(line);
    std::vector<ConfigPair> pairs;
    for (const auto& [key, value] : header.at("config").items()) {
      pairs.emplace_back(key, value.get<std::string>());
    }
    log.header.config = ParseVecConfig(pairs);
    log.header.num_envs = header.at("num_envs").get<int>();
    log.header.policy = header.value("policy", "");
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const nlohmann::json j = nlohmann::json::parse(line);
      StepRecord r;
      r.t = j.at("t").get<int64_t>();
      r.slot = j.at("slot").get<int32_t>();
      r.episode = j.at("episode").get<int64_t>();
      r.action = j.at("action").get<int32_t>();
      r.reward = j.at("reward").get<double>();
      r.done = j.at("done").get<bool>();
      r.level_seed = j.at("level_seed").get<uint32_t>();
      r.levels_completed = j.value("levels_completed", 0);
      r.state_hash = FromHex(j.at("state_hash").get<std::string>());
      r.obs_hash = FromHex(j.at("obs_hash").get<std::string>());
      log.steps.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kConfig, path + ":" + std::to_string(line_no) + ": " + e.what());
  } catch (const std::invalid_argument&) {
    Fail(ErrorKind::kConfig, path + ":" + std::to_string(line_no) + ": malformed hash");
  }
  return log;
}

}  // namespace procarcade::harness
