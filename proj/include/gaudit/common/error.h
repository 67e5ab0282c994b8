// include/gaudit/common/error.h

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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaudit {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kMalformedHeader,
  kDuplicateId,
  kAlignment,
  kUndefinedResult,
  kUnseenTerm,
  kContractViolation,
  kTransport,
  kEmptyCue,
  kUndersampledSegment,
  kPairing,
  kEmptyBand,
  kMixedShapes,
};

std::string_view ToString(ErrorCode code);

// Every failure raised by the toolkit carries a machine-readable code so the
// CLI can emit a structured error log.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaudit
