// include/gaudit/oracle/oracle.h

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

#include "gaudit/corpus/matching.h"
#include "gaudit/corpus/tokenizer.h"
#include "gaudit/oracle/features.h"

namespace gaudit::oracle {

// kIlm scores with the encoder output replaced by a zero vector, leaving only
// the decoder's internal language model.
enum class ScoreMode { kFull, kIlm };

std::string_view ToString(ScoreMode mode);
ScoreMode ParseScoreMode(std::string_view s);

// Teacher-forced scoring of candidate continuations after a shared prefix.
struct ScoreRequest {
  std::string id;
  AcousticFeatures features;
  corpus::TokenSeq prefix_tokens;
  std::vector<corpus::TokenSeq> candidates;
};

struct OracleResponse {
  std::string id;
  // Summed token log-probability of each candidate given the prefix.
  std::vector<double> candidate_logprobs;

  // Word log-probability is the sum of its token log-probabilities.
  static OracleResponse FromTokenLogprobs(
      std::string id, const std::vector<std::vector<double>>& token_logprobs);
};

// Log-probability of one candidate. Throws Error(kInvalidArgument) when the
// index is out of range.
double WordLogprob(const OracleResponse& response, std::size_t candidate_index);

// Request scoring [generated form, foil form] in the hypothesis context.
ScoreRequest MakeScoreRequest(const corpus::TermMatch& match, AcousticFeatures features,
                              std::string id);

// Abstract scoring interface over an encoder-decoder speech model. Public
// entry points validate requests and responses; implementations supply
// DoScore and optionally DoScoreBatch.
class Oracle {
 public:
  virtual ~Oracle() = default;

  OracleResponse Score(const ScoreRequest& request, ScoreMode mode);

  // Responses come back in request order. Requests are handed to the
  // implementation in chunks of at most MaxInFlight().
  std::vector<OracleResponse> ScoreBatch(std::span<const ScoreRequest> requests,
                                         ScoreMode mode);

  virtual std::size_t MaxInFlight() const { return 1; }
  virtual const corpus::Tokenizer& tokenizer() const = 0;

 protected:
  virtual OracleResponse DoScore(const ScoreRequest& request, ScoreMode mode) = 0;
  virtual std::vector<OracleResponse> DoScoreBatch(std::span<const ScoreRequest> requests,
                                                   ScoreMode mode);
};

void ValidateRequest(const ScoreRequest& request);
// Throws Error(kContractViolation) on wrong arity, non-finite or positive
// log-probabilities, or a mismatched id.
void ValidateResponse(const ScoreRequest& request, const OracleResponse& response);

}  // namespace gaudit::oracle
