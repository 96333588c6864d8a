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
// procarcade command-line harness. Exit codes: 0 ok, 2 configuration or
// usage error, 3 determinism violation, 4 generation fault, 1 anything else.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harness/bench.h"
#include "harness/episode_log.h"
#include "harness/genstats.h"
#include "harness/png.h"
#include "harness/report.h"
#include "harness/rollout.h"
#include "json.hpp"
#include "procarcade/config.h"
#include "procarcade/error.h"
#include "procarcade/game.h"
#include "procarcade/vec_env.h"

namespace {

using namespace procarcade;
using namespace procarcade::harness;
using nlohmann::json;

constexpr const char* kConfigKeys[] = {"env_name",          "num_levels",
                                       "start_level",       "rand_seed",
                                       "distribution_mode", "use_sequential_levels",
                                       "num_threads",       "max_episode_steps"};

// Flags named exactly like the configuration keys; unset flags keep defaults.
struct ConfigFlags {
  std::map<std::string, std::string> values;

  void Attach(CLI::App* app) {
    for (const char* key : kConfigKeys) {
      app->add_option(std::string("--") + key, values[key], "configuration key " + std::string(key));
    }
  }

  VecConfig Parse(CLI::App* app) const {
    std::vector<ConfigPair> pairs;
    for (const char* key : kConfigKeys) {
      if (app->count(std::string("--") + key) > 0) pairs.emplace_back(key, values.at(key));
    }
    return ParseVecConfig(pairs);
  }
};

void Emit(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) Fail(ErrorKind::kConfig, "cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
}

void PrintFrame(const uint8_t* obs) {
  // Two pixel rows per terminal row: upper half block, foreground on top.
  std::string out;
  char cell[64];
  for (int y = 0; y < kObsSize; y += 2) {
    for (int x = 0; x < kObsSize; ++x) {
      const uint8_t* a = obs + (static_cast<size_t>(y) * kObsSize + x) * 3;
      const uint8_t* b = a + kObsSize * 3;
      std::snprintf(cell, sizeof(cell), "\x1b[38;2;%d;%d;%dm\x1b[48;2;%d;%d;%dm\xe2\x96\x80", a[0],
                    a[1], a[2], b[0], b[1], b[2]);
      out += cell;
    }
    out += "\x1b[0m\n";
  }
  std::fputs(out.c_str(), stdout);
}

std::optional<int> KeyAction(char key) {
  switch (key) {
    case 'a': return EncodeMove(-1, 0);
    case 'd': return EncodeMove(1, 0);
    case 'w': return EncodeMove(0, 1);
    case 's': return EncodeMove(0, -1);
    case 'q': return EncodeMove(-1, 1);
    case 'e': return EncodeMove(1, 1);
    case 'z': return EncodeMove(-1, -1);
    case 'c': return EncodeMove(1, -1);
    case '.': return kNoopAction;
    case 'f': return 9;
    case '1': return 10;
    case '2': return 11;
    case '3': return 12;
    case '4': return 13;
    case '5': return 14;
    default: return std::nullopt;
  }
}

int Play(const VecConfig& config, const std::string& keys_path, const std::string& png_dir,
         const std::string& log_path, bool quiet) {
  VecEnv env(config.env, 1, 1);
  env.Reset();
  EpisodeLogWriter log(log_path);
  log.WriteHeader({config, 1, "play"});
  std::ifstream key_file;
  if (!keys_path.empty()) {
    key_file.open(keys_path);
    if (!key_file) Fail(ErrorKind::kConfig, "cannot open key file '" + keys_path + "'");
  }
  std::istream& in = keys_path.empty() ? std::cin : key_file;
  if (!png_dir.empty()) std::filesystem::create_directories(png_dir);
  if (!quiet) {
    std::puts("keys: w a s d move, q e z c diagonals, . no-op, f fire, 1-5 extra, x quit");
    PrintFrame(env.observations().data());
  }
  int64_t t = 0;
  int64_t episode = 0;
  char key;
  while (in.get(key)) {
    if (key == 'x') break;
    const std::optional<int> action = KeyAction(key);
    if (!action) continue;
    const int32_t a = *action;
    env.Step(std::span<const int32_t>(&a, 1));
    const StepInfo& info = env.infos()[0];
    StepRecord r;
    r.t = t;
    r.episode = episode;
    r.action = a;
    r.reward = env.rewards()[0];
    r.done = env.dones()[0] != 0;
    r.level_seed = info.level_seed;
    r.levels_completed = info.levels_completed;
    r.state_hash = env.StateHashAt(0);
    r.obs_hash = ObservationHash(env.observations().data());
    log.Write(r);
    if (!png_dir.empty()) {
      WritePng(png_dir + "/step_" + std::to_string(t) + ".png", env.observations(), kObsSize,
               kObsSize, 4);
    }
    if (!quiet) {
      PrintFrame(env.observations().data());
      std::printf("t=%lld reward=%g done=%d", static_cast<long long>(t), r.reward, r.done ? 1 : 0);
      if (r.done) std::printf(" return=%g", info.episode_return);
      std::printf("\n");
    }
    if (r.done) ++episode;
    ++t;
  }
  log.Flush();
  return 0;
}

json ScoreLogs(const std::vector<std::string>& paths) {
  std::vector<EpisodeBatch> batches;
  for (const std::string& path : paths) {
    const EpisodeLog log = ReadEpisodeLog(path);
    EpisodeBatch batch{std::string(GameName(log.header.config.env.game)),
                       log.header.config.env.difficulty,
                       {}};
    std::vector<double> running(log.header.num_envs, 0.0);
    for (const StepRecord& r : log.steps) {
      if (r.slot < 0 || r.slot >= log.header.num_envs) {
        Fail(ErrorKind::kConfig, path + ": slot out of range");
      }
      running[r.slot] += r.reward;
      if (r.done) {
        batch.returns.push_back(running[r.slot]);
        running[r.slot] = 0;
      }
    }
    batches.push_back(std::move(batch));
  }
  return ToJson(BuildReport(batches));
}

int Run(int argc, char** argv) {
  CLI::App app{"procarcade harness"};
  app.require_subcommand(1);

  ConfigFlags rollout_flags;
  CLI::App* rollout = app.add_subcommand("rollout", "run episodes and report scores");
  rollout_flags.Attach(rollout);
  int num_envs = 1;
  int64_t episodes = 1;
  std::string policy = "random";
  std::string script_path, replay_path, log_path, report_path;
  rollout->add_option("--num_envs", num_envs, "vector slots")->check(CLI::Range(1, 4096));
  rollout->add_option("--episodes", episodes, "finished episodes to collect")
      ->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
  rollout->add_option("--policy", policy, "random|scripted|replay")
      ->check(CLI::IsMember({"random", "scripted", "replay"}));
  rollout->add_option("--script", script_path, "action file for the scripted policy");
  rollout->add_option("--replay", replay_path, "episode log to replay and verify");
  rollout->add_option("--log", log_path, "JSONL episode log output");
  rollout->add_option("--report", report_path, "JSON report output (default stdout)");

  ConfigFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "measure vector step throughput");
  bench_flags.Attach(bench);
  int bench_envs = 64;
  double seconds = 2.0;
  bool no_render = false;
  bench->add_option("--num_envs", bench_envs, "vector slots")->check(CLI::Range(1, 4096));
  bench->add_option("--seconds", seconds, "time budget")->check(CLI::PositiveNumber);
  bench->add_flag("--no_render", no_render, "skip observation rendering");

  CLI::App* genstats = app.add_subcommand("genstats", "level generation statistics");
  std::string gen_game = "maze", gen_mode = "hard", dump_dir;
  int64_t seeds = 1000;
  uint32_t gen_start = 0;
  int dump_count = 8;
  genstats->add_option("--env_name", gen_game, "game");
  genstats->add_option("--distribution_mode", gen_mode, "easy|hard|memory")
      ->check(CLI::IsMember({"easy", "hard", "memory"}));
  genstats->add_option("--seeds", seeds, "levels to generate")->check(CLI::PositiveNumber);
  genstats->add_option("--start_level", gen_start, "first level seed");
  genstats->add_option("--dump", dump_dir, "directory for ASCII and PNG level dumps");
  genstats->add_option("--dump_count", dump_count, "levels to dump");

  CLI::App* score = app.add_subcommand("score", "score report from episode logs");
  std::vector<std::string> score_logs;
  score->add_option("logs", score_logs, "episode logs")->required();

  ConfigFlags play_flags;
  CLI::App* play = app.add_subcommand("play", "step an environment from the keyboard");
  play_flags.Attach(play);
  std::string keys_path, png_dir, play_log;
  bool quiet = false;
  play->add_option("--keys", keys_path, "read keys from a file instead of stdin");
  play->add_option("--png_dir", png_dir, "write one PNG per step here");
  play->add_option("--log", play_log, "JSONL episode log output");
  play->add_flag("--quiet", quiet, "no terminal frames");

  CLI::App* dump = app.add_subcommand("dump-level", "print one level as ASCII");
  std::string dump_game = "maze", dump_mode = "hard", png_path;
  uint32_t dump_seed = 0;
  dump->add_option("--env_name", dump_game, "game");
  dump->add_option("--distribution_mode", dump_mode, "easy|hard|memory")
      ->check(CLI::IsMember({"easy", "hard", "memory"}));
  dump->add_option("--seed", dump_seed, "level seed");
  dump->add_option("--png", png_path, "write the first frame here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto game_of = [](const std::string& name) {
    const auto g = ParseGameId(name);
    if (!g) Fail(ErrorKind::kConfig, "unknown game '" + name + "'");
    return *g;
  };

  if (*rollout) {
    RolloutOptions options;
    options.config = rollout_flags.Parse(rollout);
    options.num_envs = num_envs;
    options.episodes = episodes;
    options.log_path = log_path;
    std::optional<EpisodeLog> replay_log;
    if (policy == "scripted") {
      if (script_path.empty()) Fail(ErrorKind::kConfig, "--policy scripted needs --script");
      options.policy = PolicyKind::kScripted;
      options.script = ReadActionScript(script_path);
    } else if (policy == "replay") {
      if (replay_path.empty()) Fail(ErrorKind::kConfig, "--policy replay needs --replay");
      replay_log = ReadEpisodeLog(replay_path);
      options.policy = PolicyKind::kReplay;
      options.replay = &*replay_log;
    }
    const RolloutResult result = Rollout(options);
    json doc = ToJson(result.report);
    doc["ticks"] = result.ticks;
    doc["returns"] = result.returns;
    if (options.replay) doc["divergences"] = 0;
    const VecConfig& used = options.replay ? options.replay->header.config : options.config;
    if (used.env.mode == Mode::kSequential) {
      json histogram = json::object();
      for (const auto& [levels, count] : result.levels_completed_histogram) {
        histogram[std::to_string(levels)] = count;
      }
      doc["levels_completed"] = histogram;
    }
    Emit(doc, report_path);
  } else if (*bench) {
    BenchOptions options;
    options.config = bench_flags.Parse(bench);
    options.num_envs = bench_envs;
    options.seconds = seconds;
    options.render = !no_render;
    json doc = ToJson(RunBench(options));
    doc["env_name"] = GameName(options.config.env.game);
    doc["num_envs"] = bench_envs;
    doc["render"] = options.render;
    Emit(doc, "");
  } else if (*genstats) {
    GenStatsOptions options;
    options.game = game_of(gen_game);
    options.memory_mode = gen_mode == "memory";
    options.difficulty = gen_mode == "easy" ? Difficulty::kEasy : Difficulty::kHard;
    if (options.memory_mode && !SupportsMemoryMode(options.game)) {
      Fail(ErrorKind::kConfig, "memory mode is not supported by " + gen_game);
    }
    options.seeds = seeds;
    options.start_seed = gen_start;
    options.dump_dir = dump_dir;
    options.dump_count = dump_dir.empty() ? 0 : dump_count;
    Emit(GenStats(options), "");
  } else if (*score) {
    Emit(ScoreLogs(score_logs), "");
  } else if (*play) {
    return Play(play_flags.Parse(play), keys_path, png_dir, play_log, quiet);
  } else if (*dump) {
    const GameId game = game_of(dump_game);
    const bool memory = dump_mode == "memory";
    if (memory && !SupportsMemoryMode(game)) {
      Fail(ErrorKind::kConfig, "memory mode is not supported by " + dump_game);
    }
    const GameState level = GenerateLevel(
        game, dump_mode == "easy" ? Difficulty::kEasy : Difficulty::kHard, memory, dump_seed);
    std::string ascii = ToAscii(level.terrain, &level.items);
    const int px = level.player.TileX();
    const int py = level.player.TileY();
    if (level.terrain.InBounds(px, py)) {
      ascii[static_cast<size_t>(py) * (level.terrain.width() + 1) + px] = '@';
    }
    std::cout << ascii;
    const SolveResult solved = SolvabilityCheck(level);
    json stats = json::object();
    for (const LevelStat& s : GetGame(game).Stats(level)) stats[s.name] = s.value;
    std::cout << json{{"seed", dump_seed},
                      {"generation_attempt", level.generation_attempt},
                      {"verdict", VerdictName(solved.verdict)},
                      {"witness_length", solved.witness_path.size()},
                      {"stats", stats}}
                     .dump(2)
              << '\n';
    if (!png_path.empty()) {
      Observation obs;
      RenderState(level, obs);
      WritePng(png_path, obs, kObsSize, kObsSize, 4);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const procarcade::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", procarcade::ErrorKindName(e.kind()), e.what());
    switch (e.kind()) {
      case procarcade::ErrorKind::kConfig:
      case procarcade::ErrorKind::kUsage:
      case procarcade::ErrorKind::kDomain: return 2;
      case procarcade::ErrorKind::kDeterminism: return 3;
      case procarcade::ErrorKind::kGeneration: return 4;
      case procarcade::ErrorKind::kArithmetic: return 1;
    }
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
