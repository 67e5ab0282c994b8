// include/gaudit/attribution/segmentation.h

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
#include <string_view>
#include <utility>

#include "gaudit/common/matrix.h"
#include "gaudit/oracle/features.h"

namespace gaudit::attribution {

// Partition of the feature grid into labelled regions.
struct SegmentMap {
  LabelGrid labels;
  int n_segments = 0;

  // Every cell labelled in [0, n_segments) and every label used.
  void Validate() const;
  std::vector<std::size_t> Sizes() const;
};

enum class SegmentMethod { kGrid, kCluster };

std::string_view ToString(SegmentMethod method);
SegmentMethod ParseSegmentMethod(std::string_view s);

struct SegmentOptions {
  SegmentMethod method = SegmentMethod::kGrid;
  std::size_t target_segments = 100;
  // Weight of spatial distance against log-energy distance in CLUSTER.
  double compactness = 0.3;
  std::size_t iterations = 10;
};

// (frequency tiles, time tiles) whose product equals `target` and whose tile
// shape is closest to square; falls back to the nearest feasible product
// when no exact factorization fits the grid.
std::pair<std::size_t, std::size_t> GridShape(std::size_t rows, std::size_t cols,
                                              std::size_t target);

// Near-equal rectangles; tile extents differ by at most one cell.
SegmentMap SegmentGrid(std::size_t rows, std::size_t cols, std::size_t freq_tiles,
                       std::size_t time_tiles);

// GRID tiles or SLIC-style clustering on (frequency, time, log-energy)
// seeded from the GRID tiling. Throws Error(kInvalidArgument) when the
// target is zero or exceeds the cell count.
SegmentMap Segment(const oracle::AcousticFeatures& features, const SegmentOptions& options);

}  // namespace gaudit::attribution
