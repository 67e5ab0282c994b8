// include/gaudit/attribution/occlusion.h

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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gaudit/attribution/saliency.h"
#include "gaudit/common/gender.h"

namespace gaudit::attribution {

// (frequency bin, frame)
using Cell = std::pair<std::size_t, std::size_t>;

inline const std::vector<double> kDefaultSchedule = {0.01, 0.02, 0.05, 0.10, 0.15, 0.20};

struct FlipResult {
  bool flipped = false;
  std::optional<double> flip_fraction;
  std::optional<std::vector<Cell>> occluded_cells;  // sorted
  std::vector<double> schedule;
  // logp(generated) - logp(foil) on the unoccluded input. A negative margin
  // means the oracle never preferred the generated form, so nothing can flip.
  double baseline_margin = 0.0;
};

// Cells in descending score order; ties keep (bin, frame) order.
std::vector<Cell> RankCells(const Matrix& scores);

// Number of cells occluded at fraction q of n cells: ceil(q * n), at least 1.
std::size_t OcclusionBudget(double fraction, std::size_t n_cells);

// Throws Error(kInvalidArgument) unless the schedule is non-empty, strictly
// increasing and inside (0, 1].
void ValidateSchedule(std::span<const double> schedule);

// Occludes the top-ranked cells at each scheduled fraction and reports the
// first fraction where the foil overtakes the generated form.
FlipResult OcclusionFlip(const oracle::AcousticFeatures& features, const SaliencyMap& saliency,
                         oracle::Oracle& oracle, const corpus::TermMatch& match,
                         std::span<const double> schedule = kDefaultSchedule,
                         const FillOptions& fill = {});

struct GroupRate {
  std::string group;
  std::size_t n = 0;
  std::size_t n_flipped = 0;
  double rate = 0.0;
};

struct FlipRateSummary {
  GroupRate overall;
  std::vector<GroupRate> by_gender;
  std::vector<std::string> warnings;
};

// Fraction of flipped results; with `generated_genders` (parallel to
// `results`) also per gender. Throws Error(kUndefinedResult) on empty input.
FlipRateSummary FlipRate(std::span<const FlipResult> results,
                         std::span<const Gender> generated_genders = {});

}  // namespace gaudit::attribution
