// include/gaudit/cli/commands.h

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

#include <memory>
#include <span>

#include <json.hpp>

#include "gaudit/cli/run_config.h"
#include "gaudit/corpus/benchmark.h"
#include "gaudit/oracle/oracle.h"

namespace gaudit::cli {

// Builds the oracle described by `spec`. Lexicon-based oracles learn the
// gendered forms from `annotations`.
std::unique_ptr<oracle::Oracle> MakeOracle(const OracleSpec& spec,
                                           std::span<const corpus::GenderTermAnnotation> annotations);

// Each command writes <out>/<name>_report.json and returns the report.
// Reports embed the RunConfig and FNV-1a hashes of their input files.
nlohmann::json RunPrevalence(const RunConfig& config);
nlohmann::json RunIlm(const RunConfig& config);
// Also writes one CSV + JSON sidecar per term under AttributionDir().
nlohmann::json RunAttribute(const RunConfig& config);
nlohmann::json RunAnalyze(const RunConfig& config);

}  // namespace gaudit::cli
