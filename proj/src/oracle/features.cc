// src/oracle/features.cc

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

#include "gaudit/oracle/features.h"

#include <cmath>
#include <string>

#include "gaudit/common/error.h"

namespace gaudit::oracle {

void AcousticFeatures::Validate() const {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, "invalid features: " + msg);
  };
  if (matrix.rows() == 0 || matrix.cols() == 0) fail("empty matrix");
  if (bin_centers_hz.size() != matrix.rows()) {
    fail(std::to_string(bin_centers_hz.size()) + " bin centers for " +
         std::to_string(matrix.rows()) + " bins");
  }
  if (!(frame_hop_s > 0.0) || !std::isfinite(frame_hop_s)) fail("frame hop must be positive");
  for (std::size_t i = 0; i < bin_centers_hz.size(); ++i) {
    if (!(bin_centers_hz[i] > 0.0)) fail("bin centers must be positive");
    if (i > 0 && !(bin_centers_hz[i] > bin_centers_hz[i - 1])) {
      fail("bin centers must be strictly increasing");
    }
  }
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::vector<double> MelBinCenters(const MelOptions& opts) {
  const double high = opts.high_hz > 0.0 ? opts.high_hz : opts.sample_rate / 2.0;
  if (opts.n_bins == 0 || !(opts.low_hz >= 0.0) || !(high > opts.low_hz)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid mel filterbank options");
  }
  const double mel_low = HzToMel(opts.low_hz);
  const double step = (HzToMel(high) - mel_low) / static_cast<double>(opts.n_bins + 1);
  std::vector<double> centers(opts.n_bins);
  for (std::size_t i = 0; i < opts.n_bins; ++i) {
    centers[i] = MelToHz(mel_low + step * static_cast<double>(i + 1));
  }
  return centers;
}

}  // namespace gaudit::oracle
