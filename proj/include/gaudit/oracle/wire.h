// include/gaudit/oracle/wire.h

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
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaudit/oracle/oracle.h"

namespace gaudit::oracle {

// Newline-delimited JSON protocol for out-of-process adapters.
//
//   {"op":"hello"}                       -> {"max_in_flight":N}
//   {"op":"tokenize","id":..,"text":..}  -> {"id":..,"tokens":[{"text","begin","end"}]}
//   {"op":"score","id":..,"mode":"full"|"ilm","prefix_tokens":[..],
//    "candidates":[[..],[..]],
//    "features":{"frame_hop_s":..,"bin_centers_hz":[..],"matrix":[[..]..]}
//    | "features_path":"<csv>"}         -> {"id":..,"candidate_logprobs":[..]}
//   {"op":"flush"}                       -> (no reply; answer everything pending)
//
// Any request may be answered with {"id":..,"error":"..."}. Score responses
// may arrive in any order and are matched by id. A features_path points at a
// CSV matrix on the default 80-bin mel axis with a 10 ms hop unless the
// request also carries frame_hop_s / bin_centers_hz.
namespace wire {

nlohmann::json EncodeFeatures(const AcousticFeatures& features);
AcousticFeatures DecodeFeatures(const nlohmann::json& j);

nlohmann::json EncodeScoreRequest(const ScoreRequest& request, ScoreMode mode);
// Returns the request and its mode.
std::pair<ScoreRequest, ScoreMode> DecodeScoreRequest(const nlohmann::json& j);

nlohmann::json EncodeResponse(const OracleResponse& response);
// Throws Error(kTransport) for error replies and malformed payloads.
OracleResponse DecodeResponse(const nlohmann::json& j);

}  // namespace wire

struct ServeOptions {
  std::size_t max_in_flight = 8;
  // Answer each flushed group in reverse order; exercises clients' id
  // matching.
  bool reverse_order = false;
};

// Runs the adapter side of the protocol over a pair of streams until EOF.
void ServeOracle(Oracle& oracle, std::istream& in, std::ostream& out,
                 const ServeOptions& options = {});

// Client side: spawns `command` through /bin/sh and speaks the protocol over
// its stdin/stdout.
class ProcessOracle final : public Oracle {
 public:
  explicit ProcessOracle(const std::string& command);
  ~ProcessOracle() override;
  ProcessOracle(const ProcessOracle&) = delete;
  ProcessOracle& operator=(const ProcessOracle&) = delete;

  std::size_t MaxInFlight() const override { return max_in_flight_; }
  const corpus::Tokenizer& tokenizer() const override;

 protected:
  OracleResponse DoScore(const ScoreRequest& request, ScoreMode mode) override;
  std::vector<OracleResponse> DoScoreBatch(std::span<const ScoreRequest> requests,
                                           ScoreMode mode) override;

 private:
  class Channel;
  class RemoteTokenizer;

  std::unique_ptr<Channel> channel_;
  std::unique_ptr<RemoteTokenizer> tokenizer_;
  std::size_t max_in_flight_ = 1;
};

}  // namespace gaudit::oracle
