// include/gaudit/attribution/saliency.h

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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaudit/attribution/segmentation.h"
#include "gaudit/common/gender.h"
#include "gaudit/common/matrix.h"
#include "gaudit/corpus/matching.h"
#include "gaudit/oracle/oracle.h"

namespace gaudit::attribution {

enum class FillMode { kBinMean, kConstant };

std::string_view ToString(FillMode mode);
FillMode ParseFillMode(std::string_view s);

// Value written into masked or occluded cells.
struct FillOptions {
  FillMode mode = FillMode::kBinMean;
  double constant = -23.025850929940457;
};

// Per-bin fill values for one utterance.
std::vector<double> FillValues(const oracle::AcousticFeatures& features, const FillOptions& fill);

// The term a saliency map explains.
struct TermRef {
  std::string utterance_id;
  std::string term_key;
  std::string generated_form;
  std::string foil_form;
  Gender generated_gender = Gender::kMasculine;

  static TermRef From(const corpus::TermMatch& match);
};

struct SaliencyMap {
  Matrix scores;  // same shape as the features
  std::vector<double> segment_scores;
  TermRef term;
  std::size_t n_masks = 0;
  std::uint64_t seed = 0;
  double keep_prob = 0.5;
  std::vector<double> bin_centers_hz;
  double frame_hop_s = 0.01;
};

struct SaliencyOptions {
  std::size_t n_masks = 512;
  double keep_prob = 0.5;
  std::uint64_t seed = 0;
  FillOptions fill;
};

// Randomized segment masking. Each draw keeps every segment independently
// with probability keep_prob, fills the rest, and records
// d = logp(generated) - logp(foil) under the full model. A segment scores
// mean(d | kept) - mean(d | masked); cells inherit their segment's score.
//
// Throws Error(kUndersampledSegment) if some segment was never kept or never
// masked; oracle errors propagate.
SaliencyMap ContrastiveSaliency(const oracle::AcousticFeatures& features,
                                const SegmentMap& segments, oracle::Oracle& oracle,
                                const corpus::TermMatch& match, const SaliencyOptions& options);

}  // namespace gaudit::attribution
