// include/gaudit/attribution/persistence.h

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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaudit/attribution/occlusion.h"
#include "gaudit/attribution/saliency.h"

namespace gaudit::attribution {

// One term's attribution output as stored on disk: a CSV score matrix
// (rows = bins low to high, columns = frames) and a JSON sidecar.
struct SaliencyArtifact {
  SaliencyMap map;
  FlipResult flip;
  std::size_t n_segments = 0;
  std::string segment_method;
  FillOptions fill;
};

nlohmann::json FlipToJson(const FlipResult& flip);
FlipResult FlipFromJson(const nlohmann::json& j);

nlohmann::json SidecarJson(const SaliencyArtifact& artifact);

// File stem used for a term: "<utterance id>__<generated form>", with
// characters outside [A-Za-z0-9._-] replaced by '_'.
std::string ArtifactStem(const TermRef& term);

// Writes <dir>/<stem>.csv and <dir>/<stem>.json.
void WriteArtifact(const std::filesystem::path& dir, const SaliencyArtifact& artifact);

SaliencyArtifact ReadArtifact(const std::filesystem::path& sidecar_path);

// All sidecars in a directory, ordered by utterance id then term key.
std::vector<SaliencyArtifact> ReadArtifacts(const std::filesystem::path& dir);

}  // namespace gaudit::attribution
