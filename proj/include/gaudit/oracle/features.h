// include/gaudit/oracle/features.h

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
#include <vector>

#include "gaudit/common/matrix.h"

namespace gaudit::oracle {

// Model input: a (frequency bin x frame) matrix plus the axes needed to map
// cells back to Hz and seconds.
struct AcousticFeatures {
  Matrix matrix;
  double frame_hop_s = 0.01;
  std::vector<double> bin_centers_hz;

  std::size_t n_bins() const { return matrix.rows(); }
  std::size_t n_frames() const { return matrix.cols(); }
  std::size_t n_cells() const { return matrix.size(); }
  // Start time of a frame.
  double FrameTime(std::size_t frame) const { return static_cast<double>(frame) * frame_hop_s; }

  // Throws Error(kInvalidArgument) on empty matrices, mismatched axes,
  // non-positive hop, or centers that are not positive and strictly
  // increasing.
  void Validate() const;
};

double HzToMel(double hz);
double MelToHz(double mel);

struct MelOptions {
  std::size_t n_bins = 80;
  double sample_rate = 16000.0;
  double low_hz = 20.0;
  double high_hz = 0.0;  // <= 0 means Nyquist
};

// Centers of n_bins triangular filters equally spaced on the mel scale
// between low_hz and high_hz.
std::vector<double> MelBinCenters(const MelOptions& opts = {});

}  // namespace gaudit::oracle
