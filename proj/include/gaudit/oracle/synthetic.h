// include/gaudit/oracle/synthetic.h

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
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "gaudit/oracle/features.h"
#include "gaudit/oracle/lexicon.h"
#include "gaudit/oracle/oracle.h"

namespace gaudit::oracle {

// Testbed model with a planted acoustic gender cue: feminine probability
// rises with the mean energy inside a time-frequency window.
struct SyntheticOracleConfig {
  std::pair<double, double> cue_band_hz{700.0, 1400.0};
  std::pair<double, double> cue_time_s{0.2, 0.3};
  double energy_threshold = 0.5;
  double masculine_prior = 0.8;
  double sharpness = 20.0;

  void Validate() const;
};

struct GenderProbabilities {
  double p_masculine = 0.5;
  double p_feminine = 0.5;
  double log_masculine = 0.0;
  double log_feminine = 0.0;
  std::size_t cue_cells = 0;  // 0 when the prior was used
  double cue_energy = 0.0;
};

// Probabilities from the mean energy over cells whose bin center lies in
// cue_band_hz (closed) and whose frame start lies in cue_time_s (half-open).
// With no such cell the prior is returned. Throws Error(kEmptyCue) if the
// window lies entirely outside the feature extent.
GenderProbabilities SyntheticScore(const AcousticFeatures& features,
                                   const SyntheticOracleConfig& config);

// Input-independent probabilities from a masculine prior.
GenderProbabilities PriorProbabilities(double masculine_prior);

// Scores a candidate whose gender is known: its first token carries the full
// log-probability of the gender and later tokens are deterministic.
std::vector<double> GenderTokenLogprobs(const corpus::TokenSeq& candidate, Gender gender,
                                        const GenderProbabilities& probs);

class SyntheticOracle final : public Oracle {
 public:
  SyntheticOracle(SyntheticOracleConfig config, GenderLexicon lexicon,
                  std::shared_ptr<const corpus::Tokenizer> tokenizer,
                  std::size_t threads = 1);

  const SyntheticOracleConfig& config() const { return config_; }
  std::size_t MaxInFlight() const override { return 256; }
  const corpus::Tokenizer& tokenizer() const override { return *tokenizer_; }

 protected:
  OracleResponse DoScore(const ScoreRequest& request, ScoreMode mode) override;
  std::vector<OracleResponse> DoScoreBatch(std::span<const ScoreRequest> requests,
                                           ScoreMode mode) override;

 private:
  SyntheticOracleConfig config_;
  GenderLexicon lexicon_;
  std::shared_ptr<const corpus::Tokenizer> tokenizer_;
  std::size_t threads_;
};

// Ignores its input entirely, so FULL and ILM agree. The masculine
// probability comes from a per-term table keyed by the case-folded
// masculine form, falling back to a default prior.
class PriorOracle final : public Oracle {
 public:
  PriorOracle(double masculine_prior, std::map<std::string, double> term_priors,
              GenderLexicon lexicon, std::shared_ptr<const corpus::Tokenizer> tokenizer);

  std::size_t MaxInFlight() const override { return 256; }
  const corpus::Tokenizer& tokenizer() const override { return *tokenizer_; }

 protected:
  OracleResponse DoScore(const ScoreRequest& request, ScoreMode mode) override;

 private:
  double masculine_prior_;
  std::map<std::string, double> term_priors_;
  GenderLexicon lexicon_;
  std::shared_ptr<const corpus::Tokenizer> tokenizer_;
};

}  // namespace gaudit::oracle
