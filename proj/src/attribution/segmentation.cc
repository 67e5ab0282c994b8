// src/attribution/segmentation.cc

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

#include "gaudit/attribution/segmentation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "gaudit/common/error.h"

namespace gaudit::attribution {

namespace {

// Start offset of tile t when splitting n cells into k near-equal tiles.
std::size_t TileStart(std::size_t n, std::size_t k, std::size_t t) { return t * n / k; }

struct Center {
  double row = 0.0;
  double col = 0.0;
  double energy = 0.0;
};

// Relabels 4-connected components so every label is one connected region;
// fragments smaller than `min_size` (and all but the largest fragment of a
// label) are absorbed by a neighbouring region. Returns labels numbered in
// row-major order of first appearance.
SegmentMap EnforceConnectivity(const LabelGrid& raw, std::size_t min_size) {
  const std::size_t rows = raw.rows(), cols = raw.cols();
  LabelGrid comp(rows, cols, -1);
  std::vector<std::size_t> comp_size;
  std::vector<int> comp_label;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t r0 = 0; r0 < rows; ++r0) {
    for (std::size_t c0 = 0; c0 < cols; ++c0) {
      if (comp(r0, c0) >= 0) continue;
      const int id = static_cast<int>(comp_size.size());
      const int label = raw(r0, c0);
      std::size_t size = 0;
      stack.assign(1, {r0, c0});
      comp(r0, c0) = id;
      while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        ++size;
        auto visit = [&](std::size_t rr, std::size_t cc) {
          if (comp(rr, cc) < 0 && raw(rr, cc) == label) {
            comp(rr, cc) = id;
            stack.emplace_back(rr, cc);
          }
        };
        if (r > 0) visit(r - 1, c);
        if (r + 1 < rows) visit(r + 1, c);
        if (c > 0) visit(r, c - 1);
        if (c + 1 < cols) visit(r, c + 1);
      }
      comp_size.push_back(size);
      comp_label.push_back(label);
    }
  }

  // Keep the largest component of each label if it is big enough.
  std::vector<int> best_of_label;
  for (std::size_t i = 0; i < comp_size.size(); ++i) {
    const auto label = static_cast<std::size_t>(comp_label[i]);
    if (label >= best_of_label.size()) best_of_label.resize(label + 1, -1);
    int& best = best_of_label[label];
    if (best < 0 || comp_size[i] > comp_size[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  std::vector<bool> keep(comp_size.size(), false);
  bool any_kept = false;
  for (int b : best_of_label) {
    if (b >= 0 && comp_size[static_cast<std::size_t>(b)] >= min_size) {
      keep[static_cast<std::size_t>(b)] = true;
      any_kept = true;
    }
  }
  if (!any_kept) {
    // Degenerate: keep the single largest component.
    auto it = std::max_element(comp_size.begin(), comp_size.end());
    keep[static_cast<std::size_t>(it - comp_size.begin())] = true;
  }

  // Grow kept components into dropped cells, breadth first, in row-major
  // seed order so the result is deterministic.
  LabelGrid owner(rows, cols, -1);
  std::queue<std::pair<std::size_t, std::size_t>> frontier;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep[static_cast<std::size_t>(comp(r, c))]) {
        owner(r, c) = comp(r, c);
        frontier.emplace(r, c);
      }
    }
  }
  while (!frontier.empty()) {
    auto [r, c] = frontier.front();
    frontier.pop();
    auto grow = [&](std::size_t rr, std::size_t cc) {
      if (owner(rr, cc) < 0) {
        owner(rr, cc) = owner(r, c);
        frontier.emplace(rr, cc);
      }
    };
    if (r > 0) grow(r - 1, c);
    if (r + 1 < rows) grow(r + 1, c);
    if (c > 0) grow(r, c - 1);
    if (c + 1 < cols) grow(r, c + 1);
  }

  SegmentMap out;
  out.labels = LabelGrid(rows, cols, 0);
  std::vector<int> relabel(comp_size.size(), -1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      int& id = relabel[static_cast<std::size_t>(owner(r, c))];
      if (id < 0) id = out.n_segments++;
      out.labels(r, c) = id;
    }
  }
  return out;
}

SegmentMap SegmentCluster(const oracle::AcousticFeatures& features, const SegmentOptions& options) {
  const std::size_t rows = features.n_bins(), cols = features.n_frames();
  const auto [ft, tt] = GridShape(rows, cols, options.target_segments);
  SegmentMap grid = SegmentGrid(rows, cols, ft, tt);
  const double tile_h = static_cast<double>(rows) / static_cast<double>(ft);
  const double tile_w = static_cast<double>(cols) / static_cast<double>(tt);

  const auto values = features.matrix.values();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi > *lo ? *hi - *lo : 1.0;
  const double m2 = options.compactness * options.compactness;

  std::vector<Center> centers(static_cast<std::size_t>(grid.n_segments));
  LabelGrid labels = grid.labels;
  auto update_centers = [&] {
    std::vector<Center> sum(centers.size());
    std::vector<std::size_t> count(centers.size(), 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const auto k = static_cast<std::size_t>(labels(r, c));
        sum[k].row += static_cast<double>(r);
        sum[k].col += static_cast<double>(c);
        sum[k].energy += features.matrix(r, c);
        ++count[k];
      }
    }
    for (std::size_t k = 0; k < centers.size(); ++k) {
      if (count[k] == 0) continue;  // keep previous position
      const double n = static_cast<double>(count[k]);
      centers[k] = {sum[k].row / n, sum[k].col / n, sum[k].energy / n};
    }
  };
  update_centers();

  const auto reach_r = static_cast<long>(std::ceil(tile_h));
  const auto reach_c = static_cast<long>(std::ceil(tile_w));
  std::vector<double> best(rows * cols);
  for (std::size_t iter = 0; iter < options.iterations; ++iter) {
    std::fill(best.begin(), best.end(), std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < centers.size(); ++k) {
      const auto& ctr = centers[k];
      const long r_lo = std::max(0L, static_cast<long>(std::floor(ctr.row)) - reach_r);
      const long r_hi = std::min(static_cast<long>(rows) - 1, static_cast<long>(std::ceil(ctr.row)) + reach_r);
      const long c_lo = std::max(0L, static_cast<long>(std::floor(ctr.col)) - reach_c);
      const long c_hi = std::min(static_cast<long>(cols) - 1, static_cast<long>(std::ceil(ctr.col)) + reach_c);
      for (long r = r_lo; r <= r_hi; ++r) {
        for (long c = c_lo; c <= c_hi; ++c) {
          const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
          const double de = (features.matrix(ur, uc) - ctr.energy) / range;
          const double dr = (static_cast<double>(r) - ctr.row) / tile_h;
          const double dc = (static_cast<double>(c) - ctr.col) / tile_w;
          const double d = de * de + m2 * (dr * dr + dc * dc);
          double& b = best[ur * cols + uc];
          if (d < b) {
            b = d;
            labels(ur, uc) = static_cast<int>(k);
          }
        }
      }
    }
    update_centers();
  }

  const auto min_size = std::max<std::size_t>(
      1, static_cast<std::size_t>(tile_h * tile_w / 4.0));
  return EnforceConnectivity(labels, min_size);
}

}  // namespace

void SegmentMap::Validate() const {
  if (n_segments < 1) throw Error(ErrorCode::kInvalidArgument, "segment map has no segments");
  std::vector<bool> seen(static_cast<std::size_t>(n_segments), false);
  for (int l : labels.values()) {
    if (l < 0 || l >= n_segments) {
      throw Error(ErrorCode::kInvalidArgument, "segment label " + std::to_string(l) + " out of range");
    }
    seen[static_cast<std::size_t>(l)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::kInvalidArgument, "segment map has unused labels");
  }
}

std::vector<std::size_t> SegmentMap::Sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(std::max(n_segments, 0)), 0);
  for (int l : labels.values()) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

std::string_view ToString(SegmentMethod method) {
  return method == SegmentMethod::kGrid ? "grid" : "cluster";
}

SegmentMethod ParseSegmentMethod(std::string_view s) {
  if (s == "grid" || s == "GRID") return SegmentMethod::kGrid;
  if (s == "cluster" || s == "CLUSTER") return SegmentMethod::kCluster;
  throw Error(ErrorCode::kInvalidArgument, "unknown segment method '" + std::string(s) + "'");
}

std::pair<std::size_t, std::size_t> GridShape(std::size_t rows, std::size_t cols,
                                              std::size_t target) {
  if (target == 0) throw Error(ErrorCode::kInvalidArgument, "target segments must be >= 1");
  if (target > rows * cols) {
    throw Error(ErrorCode::kInvalidArgument, "target segments exceed the number of cells");
  }
  // Prefer exact factorizations; among equals, tiles closest to square.
  // Otherwise fall back to the product closest to the target.
  std::pair<std::size_t, std::size_t> best{1, 1};
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t ft = 1; ft <= std::min(rows, target); ++ft) {
    for (std::size_t tt : {target / ft, (target + ft - 1) / ft}) {
      if (tt < 1 || tt > cols) continue;
      const double miss = std::abs(static_cast<double>(ft * tt) - static_cast<double>(target));
      const double aspect = std::abs(std::log((static_cast<double>(rows) / static_cast<double>(ft)) /
                                              (static_cast<double>(cols) / static_cast<double>(tt))));
      const double cost = miss * 1e6 + aspect;
      if (cost < best_cost) {
        best_cost = cost;
        best = {ft, tt};
      }
    }
  }
  return best;
}

SegmentMap SegmentGrid(std::size_t rows, std::size_t cols, std::size_t freq_tiles,
                       std::size_t time_tiles) {
  if (freq_tiles < 1 || time_tiles < 1 || freq_tiles > rows || time_tiles > cols) {
    throw Error(ErrorCode::kInvalidArgument, "grid tiling does not fit the feature matrix");
  }
  SegmentMap out;
  out.labels = LabelGrid(rows, cols, 0);
  out.n_segments = static_cast<int>(freq_tiles * time_tiles);
  for (std::size_t i = 0; i < freq_tiles; ++i) {
    for (std::size_t j = 0; j < time_tiles; ++j) {
      const int label = static_cast<int>(i * time_tiles + j);
      for (std::size_t r = TileStart(rows, freq_tiles, i); r < TileStart(rows, freq_tiles, i + 1); ++r) {
        for (std::size_t c = TileStart(cols, time_tiles, j); c < TileStart(cols, time_tiles, j + 1); ++c) {
          out.labels(r, c) = label;
        }
      }
    }
  }
  return out;
}

SegmentMap Segment(const oracle::AcousticFeatures& features, const SegmentOptions& options) {
  const std::size_t rows = features.n_bins(), cols = features.n_frames();
  if (options.target_segments < 1) {
    throw Error(ErrorCode::kInvalidArgument, "target segments must be >= 1");
  }
  if (options.target_segments > rows * cols) {
    throw Error(ErrorCode::kInvalidArgument, "target segments exceed the number of cells");
  }
  if (options.method == SegmentMethod::kGrid) {
    const auto [ft, tt] = GridShape(rows, cols, options.target_segments);
    return SegmentGrid(rows, cols, ft, tt);
  }
  return SegmentCluster(features, options);
}

}  // namespace gaudit::attribution
