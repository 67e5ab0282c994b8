// src/analysis/frequency.cc

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

#include "gaudit/analysis/frequency.h"

#include <algorithm>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"

namespace gaudit::analysis {

std::string_view ToString(ProfileGroup group) {
  switch (group) {
    case ProfileGroup::kAll: return "ALL";
    case ProfileGroup::kFeminine: return "F";
    case ProfileGroup::kMasculine: return "M";
  }
  return "ALL";
}

FrequencyProfile BuildFrequencyProfile(std::span<const attribution::SaliencyMap> maps,
                                       ProfileGroup group) {
  FrequencyProfile p;
  p.group = group;
  for (const auto& m : maps) {
    if (group == ProfileGroup::kFeminine && m.term.generated_gender != Gender::kFeminine) continue;
    if (group == ProfileGroup::kMasculine && m.term.generated_gender != Gender::kMasculine) continue;
    if (m.scores.rows() == 0 || m.scores.cols() == 0) {
      throw Error(ErrorCode::kInvalidArgument, "empty saliency map for " + m.term.term_key);
    }
    if (p.n_examples == 0) {
      p.values.assign(m.scores.rows(), 0.0);
      p.bin_centers_hz = m.bin_centers_hz;
    } else if (m.scores.rows() != p.values.size()) {
      throw Error(ErrorCode::kMixedShapes, "saliency maps have different bin counts");
    }
    for (std::size_t b = 0; b < m.scores.rows(); ++b) {
      const auto row = m.scores.row(b);
      p.values[b] += *std::max_element(row.begin(), row.end());
    }
    ++p.n_examples;
  }
  if (p.n_examples == 0) {
    throw Error(ErrorCode::kUndefinedResult,
                "no saliency maps in group " + std::string(ToString(group)));
  }
  for (double& v : p.values) v /= static_cast<double>(p.n_examples);
  return p;
}

BandStats ComputeBandStats(const FrequencyProfile& profile, Band band) {
  BandStats s;
  s.band = band;
  double sum = 0.0;
  for (std::size_t b = 0; b < profile.values.size(); ++b) {
    const double hz = profile.bin_centers_hz[b];
    if (hz < band.low_hz || hz > band.high_hz) continue;
    const double v = profile.values[b];
    if (s.n_bins == 0 || v > s.max) {
      s.max = v;
      s.argmax_bin = b;
      s.argmax_hz = hz;
    }
    sum += v;
    ++s.n_bins;
  }
  if (s.n_bins == 0) {
    throw Error(ErrorCode::kEmptyBand, "band [" + io::FormatDouble(band.low_hz) + ", " +
                                           io::FormatDouble(band.high_hz) + "] Hz has no bins");
  }
  s.mean = sum / static_cast<double>(s.n_bins);
  return s;
}

PeakResult FormantPeaks(const FrequencyProfile& profile, std::size_t n_peaks, Band band) {
  const auto& v = profile.values;
  const std::size_t n = v.size();
  std::vector<double> smooth(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = std::min(n - 1, i + 1);
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += v[j];
    smooth[i] = sum / static_cast<double>(hi - lo + 1);
  }

  PeakResult out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hz = profile.bin_centers_hz[i];
    if (hz < band.low_hz || hz > band.high_hz) continue;
    if (smooth[i] > smooth[i - 1] && smooth[i] > smooth[i + 1]) out.peaks.push_back({i, hz, smooth[i]});
  }
  std::stable_sort(out.peaks.begin(), out.peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.value > b.value; });
  if (out.peaks.size() < n_peaks) {
    out.warnings.push_back("found " + std::to_string(out.peaks.size()) + " of " +
                           std::to_string(n_peaks) + " requested peaks");
  } else {
    out.peaks.resize(n_peaks);
  }
  std::sort(out.peaks.begin(), out.peaks.end(), [](const Peak& a, const Peak& b) { return a.bin < b.bin; });
  return out;
}

double PitchInclusionRate(std::span<const attribution::FlipResult> results,
                          std::span<const double> bin_centers_hz, Band band) {
  std::size_t flipped = 0, included = 0;
  for (const auto& r : results) {
    if (!r.flipped || !r.occluded_cells) continue;
    ++flipped;
    const bool hit = std::any_of(r.occluded_cells->begin(), r.occluded_cells->end(), [&](const auto& cell) {
      const double hz = bin_centers_hz[cell.first];
      return hz >= band.low_hz && hz <= band.high_hz;
    });
    included += hit ? 1 : 0;
  }
  if (flipped == 0) throw Error(ErrorCode::kUndefinedResult, "no flipped examples");
  return static_cast<double>(included) / static_cast<double>(flipped);
}

}  // namespace gaudit::analysis
