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
#include "harness/report.h"

#include <map>
#include <numeric>
#include <utility>

#include "harness/norm.h"

namespace procarcade::harness {

ScoreReport BuildReport(std::span<const EpisodeBatch> batches) {
  std::map<std::pair<std::string, Difficulty>, std::vector<double>> pooled;
  for (const EpisodeBatch& batch : batches) {
    if (batch.returns.empty()) continue;
    auto& into = pooled[{batch.game, batch.difficulty}];
    into.insert(into.end(), batch.returns.begin(), batch.returns.end());
  }
  ScoreReport report;
  double sum_normalized = 0;
  for (const auto& [key, returns] : pooled) {
    GameScoreRow row;
    row.game = key.first;
    row.difficulty = key.second;
    row.episodes = static_cast<int64_t>(returns.size());
    double norm = 0;
    for (double r : returns) norm += NormalizedReturn(r, row.game, row.difficulty);
    row.mean_return = std::accumulate(returns.begin(), returns.end(), 0.0) / row.episodes;
    row.mean_normalized = norm / row.episodes;
    sum_normalized += row.mean_normalized;
    report.rows.push_back(std::move(row));
  }
  if (!report.rows.empty()) report.mean_normalized = sum_normalized / report.rows.size();
  return report;
}

nlohmann::json ToJson(const ScoreReport& report) {
  nlohmann::json games = nlohmann::json::array();
  for (const GameScoreRow& row : report.rows) {
    games.push_back({{"game", row.game},
                     {"difficulty", DifficultyName(row.difficulty)},
                     {"episodes", row.episodes},
                     {"mean_return", row.mean_return},
                     {"mean_normalized_return", row.mean_normalized}});
  }
  return {{"games", games}, {"mean_normalized_return", report.mean_normalized}};
}

}  // namespace procarcade::harness
