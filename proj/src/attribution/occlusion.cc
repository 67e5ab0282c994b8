// src/attribution/occlusion.cc

// Copyright 2026 The gaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "gaudit/attribution/occlusion.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaudit/common/error.h"

namespace gaudit::attribution {

std::vector<Cell> RankCells(const Matrix& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  const auto v = scores.values();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<Cell> cells;
  cells.reserve(order.size());
  for (std::size_t i : order) cells.emplace_back(i / scores.cols(), i % scores.cols());
  return cells;
}

std::size_t OcclusionBudget(double fraction, std::size_t n_cells) {
  // The small slack keeps products like 0.05 * 8000 from rounding up past
  // the exact integer.
  const auto k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n_cells) - 1e-9));
  return std::clamp<std::size_t>(k, 1, n_cells);
}

void ValidateSchedule(std::span<const double> schedule) {
  if (schedule.empty()) throw Error(ErrorCode::kInvalidArgument, "occlusion schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0 && schedule[i] <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "occlusion fractions must lie in (0, 1]");
    }
    if (i > 0 && !(schedule[i] > schedule[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "occlusion schedule must be strictly increasing");
    }
  }
}

FlipResult OcclusionFlip(const oracle::AcousticFeatures& features, const SaliencyMap& saliency,
                         oracle::Oracle& oracle, const corpus::TermMatch& match,
                         std::span<const double> schedule, const FillOptions& fill) {
  ValidateSchedule(schedule);
  if (saliency.scores.rows() != features.n_bins() || saliency.scores.cols() != features.n_frames()) {
    throw Error(ErrorCode::kMixedShapes, "saliency map shape differs from the features");
  }
  FlipResult result;
  result.schedule.assign(schedule.begin(), schedule.end());

  const auto ranked = RankCells(saliency.scores);
  const auto fill_values = FillValues(features, fill);
  const oracle::ScoreRequest base = oracle::MakeScoreRequest(match, features, "baseline");

  std::vector<oracle::ScoreRequest> requests{base};
  for (std::size_t step = 0; step < schedule.size(); ++step) {
    oracle::ScoreRequest req = base;
    req.id = "occlude-" + std::to_string(step);
    const std::size_t k = OcclusionBudget(schedule[step], features.n_cells());
    for (std::size_t i = 0; i < k; ++i) {
      const auto [b, f] = ranked[i];
      req.features.matrix(b, f) = fill_values[b];
    }
    requests.push_back(std::move(req));
  }
  const auto responses = oracle.ScoreBatch(requests, oracle::ScoreMode::kFull);
  auto margin = [](const oracle::OracleResponse& r) {
    return oracle::WordLogprob(r, 0) - oracle::WordLogprob(r, 1);
  };
  result.baseline_margin = margin(responses.front());
  if (result.baseline_margin < 0.0) return result;

  for (std::size_t step = 0; step < schedule.size(); ++step) {
    if (margin(responses[step + 1]) < 0.0) {
      const std::size_t k = OcclusionBudget(schedule[step], features.n_cells());
      std::vector<Cell> cells(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(cells.begin(), cells.end());
      result.flipped = true;
      result.flip_fraction = schedule[step];
      result.occluded_cells = std::move(cells);
      break;
    }
  }
  return result;
}

FlipRateSummary FlipRate(std::span<const FlipResult> results, std::span<const Gender> generated_genders) {
  if (results.empty()) throw Error(ErrorCode::kUndefinedResult, "flip rate of no results");
  if (!generated_genders.empty() && generated_genders.size() != results.size()) {
    throw Error(ErrorCode::kInvalidArgument, "gender labels do not match results");
  }
  auto rate = [](std::string group, std::size_t n, std::size_t flipped) {
    return GroupRate{std::move(group), n, flipped,
                     static_cast<double>(flipped) / static_cast<double>(n)};
  };
  FlipRateSummary s;
  std::size_t flipped = 0;
  for (const auto& r : results) flipped += r.flipped ? 1 : 0;
  s.overall = rate("ALL", results.size(), flipped);
  if (generated_genders.empty()) return s;
  for (Gender g : {Gender::kFeminine, Gender::kMasculine}) {
    std::size_t n = 0, f = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (generated_genders[i] != g) continue;
      ++n;
      f += results[i].flipped ? 1 : 0;
    }
    if (n == 0) {
      s.warnings.push_back("no results with generated gender " + std::string(ToString(g)));
      continue;
    }
    s.by_gender.push_back(rate(std::string(ToString(g)), n, f));
  }
  return s;
}

}  // namespace gaudit::attribution
