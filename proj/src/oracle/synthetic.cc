// src/oracle/synthetic.cc

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

#include "gaudit/oracle/synthetic.h"

#include <algorithm>
#include <cmath>

#include "gaudit/common/error.h"
#include "gaudit/common/parallel.h"
#include "gaudit/common/text.h"

namespace gaudit::oracle {

namespace {

// log(1 + exp(x)) without overflow.
double Softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

Gender CandidateGender(const GenderLexicon& lexicon, const corpus::TokenSeq& candidate,
                       const std::string& request_id) {
  auto entry = lexicon.Lookup(candidate);
  if (!entry) {
    std::string joined;
    for (const auto& t : candidate) joined += (joined.empty() ? "" : " ") + t;
    throw Error(ErrorCode::kInvalidArgument, "request " + request_id + ": candidate '" + joined +
                                           "' is not a known gendered form");
  }
  return entry->gender;
}

}  // namespace

void SyntheticOracleConfig::Validate() const {
  if (!(cue_band_hz.first < cue_band_hz.second)) {
    throw Error(ErrorCode::kInvalidArgument, "cue band must satisfy low < high");
  }
  if (!(cue_time_s.first < cue_time_s.second)) {
    throw Error(ErrorCode::kInvalidArgument, "cue time must satisfy start < end");
  }
  if (!(masculine_prior > 0.0 && masculine_prior < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "masculine prior must lie in (0, 1)");
  }
  if (!(sharpness > 0.0) || !std::isfinite(sharpness) || !std::isfinite(energy_threshold)) {
    throw Error(ErrorCode::kInvalidArgument, "sharpness must be positive and finite");
  }
}

GenderProbabilities PriorProbabilities(double masculine_prior) {
  GenderProbabilities p;
  p.p_masculine = masculine_prior;
  p.p_feminine = 1.0 - masculine_prior;
  p.log_masculine = std::log(masculine_prior);
  p.log_feminine = std::log1p(-masculine_prior);
  return p;
}

GenderProbabilities SyntheticScore(const AcousticFeatures& features,
                                   const SyntheticOracleConfig& config) {
  config.Validate();
  const auto& centers = features.bin_centers_hz;
  const double t_end = features.FrameTime(features.n_frames());
  const auto [band_lo, band_hi] = config.cue_band_hz;
  const auto [time_lo, time_hi] = config.cue_time_s;
  if (band_hi < centers.front() || band_lo > centers.back() || time_hi <= 0.0 ||
      time_lo >= t_end) {
    throw Error(ErrorCode::kEmptyCue, "cue window lies outside the feature extent");
  }

  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t b = 0; b < features.n_bins(); ++b) {
    if (centers[b] < band_lo || centers[b] > band_hi) continue;
    for (std::size_t f = 0; f < features.n_frames(); ++f) {
      const double t = features.FrameTime(f);
      if (t < time_lo || t >= time_hi) continue;
      sum += features.matrix(b, f);
      ++n;
    }
  }
  if (n == 0) return PriorProbabilities(config.masculine_prior);

  GenderProbabilities p;
  p.cue_cells = n;
  p.cue_energy = sum / static_cast<double>(n);
  const double x = config.sharpness * (p.cue_energy - config.energy_threshold);
  p.log_feminine = -Softplus(-x);
  p.log_masculine = -Softplus(x);
  p.p_feminine = std::exp(p.log_feminine);
  p.p_masculine = std::exp(p.log_masculine);
  return p;
}

std::vector<double> GenderTokenLogprobs(const corpus::TokenSeq& candidate, Gender gender,
                                        const GenderProbabilities& probs) {
  std::vector<double> lps(candidate.size(), 0.0);
  if (!lps.empty()) {
    lps.front() = gender == Gender::kFeminine ? probs.log_feminine : probs.log_masculine;
  }
  return lps;
}

SyntheticOracle::SyntheticOracle(SyntheticOracleConfig config, GenderLexicon lexicon,
                                 std::shared_ptr<const corpus::Tokenizer> tokenizer,
                                 std::size_t threads)
    : config_(config),
      lexicon_(std::move(lexicon)),
      tokenizer_(std::move(tokenizer)),
      threads_(std::max<std::size_t>(1, threads)) {
  config_.Validate();
}

OracleResponse SyntheticOracle::DoScore(const ScoreRequest& request, ScoreMode mode) {
  const auto probs = mode == ScoreMode::kIlm ? PriorProbabilities(config_.masculine_prior)
                                             : SyntheticScore(request.features, config_);
  std::vector<std::vector<double>> token_lps;
  for (const auto& c : request.candidates) {
    token_lps.push_back(GenderTokenLogprobs(c, CandidateGender(lexicon_, c, request.id), probs));
  }
  return OracleResponse::FromTokenLogprobs(request.id, token_lps);
}

std::vector<OracleResponse> SyntheticOracle::DoScoreBatch(std::span<const ScoreRequest> requests,
                                                          ScoreMode mode) {
  std::vector<OracleResponse> out(requests.size());
  ParallelFor(requests.size(), threads_, [&](std::size_t i) { out[i] = DoScore(requests[i], mode); });
  return out;
}

PriorOracle::PriorOracle(double masculine_prior, std::map<std::string, double> term_priors,
                         GenderLexicon lexicon,
                         std::shared_ptr<const corpus::Tokenizer> tokenizer)
    : masculine_prior_(masculine_prior),
      lexicon_(std::move(lexicon)),
      tokenizer_(std::move(tokenizer)) {
  auto check = [](double p) {
    if (!(p > 0.0 && p < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "masculine prior must lie in (0, 1)");
    }
  };
  check(masculine_prior_);
  for (const auto& [form, p] : term_priors) {
    check(p);
    term_priors_[text::FoldCase(form)] = p;
  }
}

OracleResponse PriorOracle::DoScore(const ScoreRequest& request, ScoreMode /*mode*/) {
  std::vector<std::vector<double>> token_lps;
  for (const auto& c : request.candidates) {
    auto entry = lexicon_.Lookup(c);
    if (!entry) CandidateGender(lexicon_, c, request.id);  // throws
    auto it = term_priors_.find(entry->form_m);
    const double prior = it == term_priors_.end() ? masculine_prior_ : it->second;
    token_lps.push_back(GenderTokenLogprobs(c, entry->gender, PriorProbabilities(prior)));
  }
  return OracleResponse::FromTokenLogprobs(request.id, token_lps);
}

}  // namespace gaudit::oracle
