// src/attribution/saliency.cc

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

#include "gaudit/attribution/saliency.h"

#include <algorithm>
#include <cmath>

#include "gaudit/common/error.h"
#include "gaudit/common/random.h"

namespace gaudit::attribution {

namespace {

// Masks evaluated per oracle batch; bounds peak memory from feature copies.
constexpr std::size_t kMaskChunk = 64;

}  // namespace

std::string_view ToString(FillMode mode) { return mode == FillMode::kBinMean ? "bin_mean" : "constant"; }

FillMode ParseFillMode(std::string_view s) {
  if (s == "bin_mean") return FillMode::kBinMean;
  if (s == "constant") return FillMode::kConstant;
  throw Error(ErrorCode::kInvalidArgument, "unknown fill mode '" + std::string(s) + "'");
}

std::vector<double> FillValues(const oracle::AcousticFeatures& features, const FillOptions& fill) {
  std::vector<double> out(features.n_bins(), fill.constant);
  if (fill.mode == FillMode::kBinMean) {
    for (std::size_t b = 0; b < features.n_bins(); ++b) {
      double sum = 0.0;
      for (double v : features.matrix.row(b)) sum += v;
      out[b] = sum / static_cast<double>(features.n_frames());
    }
  }
  return out;
}

TermRef TermRef::From(const corpus::TermMatch& match) {
  return {match.annotation.utterance_id, match.Key(), match.generated_form, match.foil_form,
          match.generated_gender};
}

SaliencyMap ContrastiveSaliency(const oracle::AcousticFeatures& features,
                                const SegmentMap& segments, oracle::Oracle& oracle,
                                const corpus::TermMatch& match, const SaliencyOptions& options) {
  features.Validate();
  segments.Validate();
  if (segments.labels.rows() != features.n_bins() || segments.labels.cols() != features.n_frames()) {
    throw Error(ErrorCode::kMixedShapes, "segment map shape differs from the features");
  }
  if (options.n_masks < 2) throw Error(ErrorCode::kInvalidArgument, "n_masks must be at least 2");
  if (!(options.keep_prob > 0.0 && options.keep_prob < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "keep_prob must lie in (0, 1)");
  }

  const auto n_seg = static_cast<std::size_t>(segments.n_segments);
  const auto fill = FillValues(features, options.fill);
  const auto labels = segments.labels.values();

  // Draw every mask up front, mask-major, so the sequence depends only on
  // the seed.
  UniformSource rng(options.seed);
  std::vector<std::vector<bool>> keep(options.n_masks, std::vector<bool>(n_seg));
  for (auto& mask : keep) {
    for (std::size_t s = 0; s < n_seg; ++s) mask[s] = rng.Bernoulli(options.keep_prob);
  }

  std::vector<double> diffs(options.n_masks);
  const oracle::ScoreRequest base = oracle::MakeScoreRequest(match, features, "");
  for (std::size_t begin = 0; begin < options.n_masks; begin += kMaskChunk) {
    const std::size_t end = std::min(options.n_masks, begin + kMaskChunk);
    std::vector<oracle::ScoreRequest> batch;
    batch.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      oracle::ScoreRequest req = base;
      req.id = "mask-" + std::to_string(i);
      auto cells = req.features.matrix.values();
      for (std::size_t cell = 0; cell < cells.size(); ++cell) {
        if (!keep[i][static_cast<std::size_t>(labels[cell])]) cells[cell] = fill[cell / features.n_frames()];
      }
      batch.push_back(std::move(req));
    }
    const auto responses = oracle.ScoreBatch(batch, oracle::ScoreMode::kFull);
    for (std::size_t i = begin; i < end; ++i) {
      const auto& r = responses[i - begin];
      diffs[i] = oracle::WordLogprob(r, 0) - oracle::WordLogprob(r, 1);
    }
  }

  std::vector<double> kept_sum(n_seg, 0.0), masked_sum(n_seg, 0.0);
  std::vector<std::size_t> kept_n(n_seg, 0), masked_n(n_seg, 0);
  for (std::size_t i = 0; i < options.n_masks; ++i) {
    for (std::size_t s = 0; s < n_seg; ++s) {
      if (keep[i][s]) {
        kept_sum[s] += diffs[i];
        ++kept_n[s];
      } else {
        masked_sum[s] += diffs[i];
        ++masked_n[s];
      }
    }
  }

  SaliencyMap map;
  map.term = TermRef::From(match);
  map.n_masks = options.n_masks;
  map.seed = options.seed;
  map.keep_prob = options.keep_prob;
  map.bin_centers_hz = features.bin_centers_hz;
  map.frame_hop_s = features.frame_hop_s;
  map.segment_scores.resize(n_seg);
  for (std::size_t s = 0; s < n_seg; ++s) {
    if (kept_n[s] == 0 || masked_n[s] == 0) {
      throw Error(ErrorCode::kUndersampledSegment,
                  "segment " + std::to_string(s) + " was " + (kept_n[s] == 0 ? "never kept" : "never masked") +
                      " across " + std::to_string(options.n_masks) + " masks; increase n_masks");
    }
    map.segment_scores[s] = kept_sum[s] / static_cast<double>(kept_n[s]) -
                            masked_sum[s] / static_cast<double>(masked_n[s]);
  }
  map.scores = Matrix(features.n_bins(), features.n_frames());
  auto out = map.scores.values();
  for (std::size_t cell = 0; cell < out.size(); ++cell) {
    out[cell] = map.segment_scores[static_cast<std::size_t>(labels[cell])];
  }
  return map;
}

}  // namespace gaudit::attribution
