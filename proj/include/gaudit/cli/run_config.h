// include/gaudit/cli/run_config.h

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
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaudit/analysis/frequency.h"
#include "gaudit/attribution/occlusion.h"
#include "gaudit/attribution/saliency.h"
#include "gaudit/attribution/segmentation.h"
#include "gaudit/oracle/synthetic.h"

namespace gaudit::cli {

enum class OracleKind { kSynthetic, kPrior, kAdapter };

struct OracleSpec {
  OracleKind kind = OracleKind::kSynthetic;
  oracle::SyntheticOracleConfig synthetic;
  // PriorOracle only: masculine form -> masculine probability.
  std::map<std::string, double> term_priors;
  std::string adapter_command;
  std::size_t threads = 1;
};

// Parses "synthetic", "prior" (alias "constant") or "adapter:<command>" and
// updates the kind (and command) of `spec`.
void ApplyOracleFlag(OracleSpec& spec, const std::string& flag);

struct RunPaths {
  std::string benchmark;
  std::string hypotheses;
  std::string corpus;
  std::string articles;
  std::string out = "out";
  std::string attribution_dir;  // defaults to <out>/saliency
  std::string alignments;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t n_masks = 512;
  double keep_prob = 0.5;
  std::size_t segments = 100;
  attribution::SegmentMethod segment_method = attribution::SegmentMethod::kGrid;
  double compactness = 0.3;
  std::vector<double> occlusion_schedule = attribution::kDefaultSchedule;
  analysis::Band pitch_band = analysis::kPitchBand;
  analysis::Band formant_band = analysis::kFormantBand;
  attribution::FillOptions fill;
  std::set<std::string> categories = {"1"};
  bool flipped_only = true;
  OracleSpec oracle;
  RunPaths paths;

  std::filesystem::path AttributionDir() const;
};

nlohmann::json ToJson(const RunConfig& config);
// Missing fields keep their defaults; unknown fields are rejected.
RunConfig RunConfigFromJson(const nlohmann::json& j);
RunConfig LoadRunConfig(const std::filesystem::path& path);

}  // namespace gaudit::cli
