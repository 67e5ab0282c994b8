// src/oracle/oracle.cc

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

#include "gaudit/oracle/oracle.h"

#include <algorithm>
#include <cmath>

#include "gaudit/common/error.h"

namespace gaudit::oracle {

std::string_view ToString(ScoreMode mode) { return mode == ScoreMode::kFull ? "full" : "ilm"; }

ScoreMode ParseScoreMode(std::string_view s) {
  if (s == "full" || s == "FULL") return ScoreMode::kFull;
  if (s == "ilm" || s == "ILM") return ScoreMode::kIlm;
  throw Error(ErrorCode::kInvalidArgument, "unknown score mode '" + std::string(s) + "'");
}

OracleResponse OracleResponse::FromTokenLogprobs(
    std::string id, const std::vector<std::vector<double>>& token_logprobs) {
  OracleResponse r;
  r.id = std::move(id);
  for (const auto& tokens : token_logprobs) {
    double sum = 0.0;
    for (double lp : tokens) sum += lp;
    r.candidate_logprobs.push_back(sum);
  }
  return r;
}

double WordLogprob(const OracleResponse& response, std::size_t candidate_index) {
  if (candidate_index >= response.candidate_logprobs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "candidate index " + std::to_string(candidate_index) + " out of range");
  }
  return response.candidate_logprobs[candidate_index];
}

ScoreRequest MakeScoreRequest(const corpus::TermMatch& match, AcousticFeatures features,
                              std::string id) {
  ScoreRequest r;
  r.id = std::move(id);
  r.features = std::move(features);
  r.prefix_tokens = match.PrefixTokens();
  r.candidates = {match.GeneratedTokens(), match.foil_tokens};
  return r;
}

void ValidateRequest(const ScoreRequest& request) {
  request.features.Validate();
  if (request.candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "score request " + request.id + " has no candidates");
  }
  for (const auto& c : request.candidates) {
    if (c.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "score request " + request.id + " has an empty candidate");
    }
  }
}

void ValidateResponse(const ScoreRequest& request, const OracleResponse& response) {
  if (response.id != request.id) {
    throw Error(ErrorCode::kContractViolation,
                "response id '" + response.id + "' does not match request '" + request.id + "'");
  }
  if (response.candidate_logprobs.size() != request.candidates.size()) {
    throw Error(ErrorCode::kContractViolation,
                "response " + response.id + " scores " +
                    std::to_string(response.candidate_logprobs.size()) + " of " +
                    std::to_string(request.candidates.size()) + " candidates");
  }
  for (double lp : response.candidate_logprobs) {
    if (!std::isfinite(lp) || lp > 0.0) {
      throw Error(ErrorCode::kContractViolation,
                  "response " + response.id + " has log-probability outside (-inf, 0]");
    }
  }
}

OracleResponse Oracle::Score(const ScoreRequest& request, ScoreMode mode) {
  ValidateRequest(request);
  auto response = DoScore(request, mode);
  ValidateResponse(request, response);
  return response;
}

std::vector<OracleResponse> Oracle::ScoreBatch(std::span<const ScoreRequest> requests,
                                               ScoreMode mode) {
  for (const auto& r : requests) ValidateRequest(r);
  std::vector<OracleResponse> out;
  out.reserve(requests.size());
  const std::size_t chunk = std::max<std::size_t>(1, MaxInFlight());
  for (std::size_t begin = 0; begin < requests.size(); begin += chunk) {
    auto part = requests.subspan(begin, std::min(chunk, requests.size() - begin));
    auto responses = DoScoreBatch(part, mode);
    if (responses.size() != part.size()) {
      throw Error(ErrorCode::kContractViolation, "oracle returned " +
                                                     std::to_string(responses.size()) +
                                                     " responses for " +
                                                     std::to_string(part.size()) + " requests");
    }
    for (std::size_t i = 0; i < part.size(); ++i) {
      ValidateResponse(part[i], responses[i]);
      out.push_back(std::move(responses[i]));
    }
  }
  return out;
}

std::vector<OracleResponse> Oracle::DoScoreBatch(std::span<const ScoreRequest> requests,
                                                 ScoreMode mode) {
  std::vector<OracleResponse> out;
  out.reserve(requests.size());
  for (const auto& r : requests) out.push_back(DoScore(r, mode));
  return out;
}

}  // namespace gaudit::oracle
