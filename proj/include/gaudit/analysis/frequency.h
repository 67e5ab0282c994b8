// include/gaudit/analysis/frequency.h

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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaudit/attribution/occlusion.h"
#include "gaudit/attribution/saliency.h"

namespace gaudit::analysis {

struct Band {
  double low_hz = 0.0;
  double high_hz = 0.0;
};

// Region of the fundamental frequency.
inline constexpr Band kPitchBand{80.0, 350.0};
// Region of the first and second formants.
inline constexpr Band kFormantBand{350.0, 2500.0};

enum class ProfileGroup { kAll, kFeminine, kMasculine };

std::string_view ToString(ProfileGroup group);

struct FrequencyProfile {
  std::vector<double> values;  // one per bin
  std::vector<double> bin_centers_hz;
  ProfileGroup group = ProfileGroup::kAll;
  std::size_t n_examples = 0;
};

// Per map, the maximum score of each bin over time; then the mean of those
// per-bin maxima across the maps of `group` (by generated gender).
// Throws Error(kMixedShapes) when bin counts differ and
// Error(kUndefinedResult) when no map falls in the group.
FrequencyProfile BuildFrequencyProfile(std::span<const attribution::SaliencyMap> maps,
                                       ProfileGroup group);

struct BandStats {
  Band band;
  std::size_t n_bins = 0;
  double mean = 0.0;
  double max = 0.0;
  std::size_t argmax_bin = 0;
  double argmax_hz = 0.0;
};

// Statistics over bins whose centers fall inside the band. Throws
// Error(kEmptyBand) if there are none.
BandStats ComputeBandStats(const FrequencyProfile& profile, Band band);

struct Peak {
  std::size_t bin = 0;
  double hz = 0.0;
  double value = 0.0;  // smoothed
};

struct PeakResult {
  std::vector<Peak> peaks;  // ascending Hz
  std::vector<std::string> warnings;
};

// 3-bin moving average (2-bin at the edges), then strict interior local
// maxima whose centers lie in `band`; keeps the n_peaks highest.
PeakResult FormantPeaks(const FrequencyProfile& profile, std::size_t n_peaks = 2,
                        Band band = kFormantBand);

// Share of flipped results whose occluded cells include at least one bin
// inside `band`. Unflipped results are ignored; with none flipped throws
// Error(kUndefinedResult).
double PitchInclusionRate(std::span<const attribution::FlipResult> results,
                          std::span<const double> bin_centers_hz, Band band = kPitchBand);

}  // namespace gaudit::analysis
