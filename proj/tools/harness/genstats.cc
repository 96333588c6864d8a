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
#include "harness/genstats.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <vector>

#include "harness/png.h"
#include "procarcade/error.h"
#include "procarcade/game.h"
#include "procarcade/render.h"

namespace procarcade::harness {

double Correlation(std::span<const double> a, std::span<const double> b) {
  const size_t n = std::min(a.size(), b.size());
  if (n < 2) return 0;
  double ma = 0, mb = 0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0 || sbb == 0) return 0;
  return sab / std::sqrt(saa * sbb);
}

nlohmann::json GenStats(const GenStatsOptions& options) {
  int64_t counts[3] = {0, 0, 0};  // indexed by Verdict
  int64_t generation_failures = 0;
  int64_t reproducible = 0;
  int64_t attempts = 0;
  std::vector<std::string> names;
  std::map<std::string, std::vector<double>> series;
  std::vector<uint32_t> unsolved;
  if (!options.dump_dir.empty()) std::filesystem::create_directories(options.dump_dir);
  for (int64_t i = 0; i < options.seeds; ++i) {
    const uint32_t seed = options.start_seed + static_cast<uint32_t>(i);
    GameState level;
    try {
      level = GenerateLevel(options.game, options.difficulty, options.memory_mode, seed);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kGeneration) throw;
      ++generation_failures;
      continue;
    }
    attempts += level.generation_attempt + 1;
    const GameState again =
        GenerateLevel(options.game, options.difficulty, options.memory_mode, seed);
    if (StateHash(again) == StateHash(level)) ++reproducible;
    const SolveResult solved = SolvabilityCheck(level);
    ++counts[static_cast<int>(solved.verdict)];
    if (solved.verdict != Verdict::kSolvable && unsolved.size() < 32) unsolved.push_back(seed);
    for (const LevelStat& stat : GetGame(options.game).Stats(level)) {
      if (!series.contains(stat.name)) names.push_back(stat.name);
      series[stat.name].push_back(stat.value);
    }
    if (!options.dump_dir.empty() && i < options.dump_count) {
      const std::string stem = options.dump_dir + "/" + std::string(GameName(options.game)) +
                               "_" + std::to_string(seed);
      std::ofstream(stem + ".txt") << ToAscii(level.terrain, &level.items);
      Observation obs;
      Render(level, FullView(level), obs);
      WritePng(stem + ".png", obs, kObsSize, kObsSize, 4);
    }
  }
  const int64_t generated = options.seeds - generation_failures;
  const double denom = generated > 0 ? static_cast<double>(generated) : 1.0;
  nlohmann::json stats = nlohmann::json::object();
  for (const std::string& name : names) {
    const std::vector<double>& v = series[name];
    double sum = 0;
    for (double x : v) sum += x;
    stats[name] = {{"mean", sum / v.size()},
                   {"min", *std::min_element(v.begin(), v.end())},
                   {"max", *std::max_element(v.begin(), v.end())}};
  }
  nlohmann::json correlations = nlohmann::json::object();
  for (size_t a = 0; a < names.size(); ++a) {
    for (size_t b = a + 1; b < names.size(); ++b) {
      correlations[names[a] + "~" + names[b]] = Correlation(series[names[a]], series[names[b]]);
    }
  }
  return {{"game", GameName(options.game)},
          {"difficulty", DifficultyName(options.difficulty)},
          {"memory_mode", options.memory_mode},
          {"start_seed", options.start_seed},
          {"seeds", options.seeds},
          {"generation_failures", generation_failures},
          {"mean_generation_attempts", attempts / denom},
          {"solvable", counts[static_cast<int>(Verdict::kSolvable)]},
          {"unsolvable", counts[static_cast<int>(Verdict::kUnsolvable)]},
          {"unknown", counts[static_cast<int>(Verdict::kUnknown)]},
          {"solvable_rate", counts[static_cast<int>(Verdict::kSolvable)] / denom},
          {"unknown_rate", counts[static_cast<int>(Verdict::kUnknown)] / denom},
          {"reproducible", reproducible},
          {"unsolved_seeds", unsolved},
          {"stats", stats},
          {"correlations", correlations}};
}

}  // namespace procarcade::harness
