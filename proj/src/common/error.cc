// src/common/error.cc

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

#include "gaudit/common/error.h"

namespace gaudit {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kMalformedHeader: return "malformed_header";
    case ErrorCode::kDuplicateId: return "duplicate_id";
    case ErrorCode::kAlignment: return "alignment";
    case ErrorCode::kUndefinedResult: return "undefined_result";
    case ErrorCode::kUnseenTerm: return "unseen_term";
    case ErrorCode::kContractViolation: return "contract_violation";
    case ErrorCode::kTransport: return "transport";
    case ErrorCode::kEmptyCue: return "empty_cue";
    case ErrorCode::kUndersampledSegment: return "undersampled_segment";
    case ErrorCode::kPairing: return "pairing";
    case ErrorCode::kEmptyBand: return "empty_band";
    case ErrorCode::kMixedShapes: return "mixed_shapes";
  }
  return "unknown";
}

}  // namespace gaudit
