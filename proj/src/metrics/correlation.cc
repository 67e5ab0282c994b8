// src/metrics/correlation.cc

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

#include "gaudit/metrics/correlation.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaudit/common/error.h"

namespace gaudit::metrics {

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kInvalidArgument, "pearson: series lengths differ (" +
                                                 std::to_string(xs.size()) + " vs " +
                                                 std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 2) throw Error(ErrorCode::kInvalidArgument, "pearson: need at least 2 points");

  // Single pass with running co-moments (Welford).
  double mean_x = 0.0, mean_y = 0.0, m2_x = 0.0, m2_y = 0.0, c_xy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    const double dx = xs[i] - mean_x;
    mean_x += dx / n;
    const double dy = ys[i] - mean_y;
    mean_y += dy / n;
    m2_x += dx * (xs[i] - mean_x);
    m2_y += dy * (ys[i] - mean_y);
    c_xy += dx * (ys[i] - mean_y);
  }
  if (!(m2_x > 0.0) || !(m2_y > 0.0)) {
    throw Error(ErrorCode::kUndefinedResult, "pearson: zero variance");
  }
  return std::clamp(c_xy / std::sqrt(m2_x * m2_y), -1.0, 1.0);
}

}  // namespace gaudit::metrics
