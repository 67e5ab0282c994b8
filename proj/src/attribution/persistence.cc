// src/attribution/persistence.cc

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

#include "gaudit/attribution/persistence.h"

#include <algorithm>
#include <cctype>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"

namespace gaudit::attribution {

using nlohmann::json;

json FlipToJson(const FlipResult& flip) {
  json j;
  j["flipped"] = flip.flipped;
  j["flip_fraction"] = flip.flip_fraction ? json(*flip.flip_fraction) : json(nullptr);
  if (flip.occluded_cells) {
    json cells = json::array();
    for (const auto& [b, f] : *flip.occluded_cells) cells.push_back({b, f});
    j["occluded_cells"] = std::move(cells);
  } else {
    j["occluded_cells"] = nullptr;
  }
  j["schedule"] = flip.schedule;
  j["baseline_margin"] = flip.baseline_margin;
  return j;
}

FlipResult FlipFromJson(const json& j) {
  FlipResult flip;
  flip.flipped = j.at("flipped").get<bool>();
  if (!j.at("flip_fraction").is_null()) flip.flip_fraction = j.at("flip_fraction").get<double>();
  if (!j.at("occluded_cells").is_null()) {
    std::vector<Cell> cells;
    for (const auto& c : j.at("occluded_cells")) {
      cells.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    }
    flip.occluded_cells = std::move(cells);
  }
  flip.schedule = j.at("schedule").get<std::vector<double>>();
  flip.baseline_margin = j.value("baseline_margin", 0.0);
  if (flip.flipped != flip.flip_fraction.has_value() || flip.flipped != flip.occluded_cells.has_value()) {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent flip record");
  }
  return flip;
}

std::string ArtifactStem(const TermRef& term) {
  std::string stem = term.utterance_id + "__" + term.generated_form;
  for (char& c : stem) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '.' || c == '_' || c == '-') || u >= 0x80) c = '_';
  }
  return stem;
}

json SidecarJson(const SaliencyArtifact& a) {
  const auto& m = a.map;
  return {{"id", m.term.utterance_id},
          {"term",
           {{"key", m.term.term_key},
            {"generated_form", m.term.generated_form},
            {"foil_form", m.term.foil_form},
            {"generated_gender", ToString(m.term.generated_gender)}}},
          {"n_masks", m.n_masks},
          {"seed", m.seed},
          {"segments", a.n_segments},
          {"segment_method", a.segment_method},
          {"keep_prob", m.keep_prob},
          {"fill", {{"mode", ToString(a.fill.mode)}, {"constant", a.fill.constant}}},
          {"frame_hop_s", m.frame_hop_s},
          {"bin_centers_hz", m.bin_centers_hz},
          {"scores_csv", ArtifactStem(m.term) + ".csv"},
          {"flip", FlipToJson(a.flip)}};
}

void WriteArtifact(const std::filesystem::path& dir, const SaliencyArtifact& artifact) {
  const auto stem = ArtifactStem(artifact.map.term);
  io::WriteFile(dir / (stem + ".csv"), io::FormatCsvMatrix(artifact.map.scores));
  io::WriteFile(dir / (stem + ".json"), SidecarJson(artifact).dump(2) + "\n");
}

SaliencyArtifact ReadArtifact(const std::filesystem::path& sidecar_path) {
  json j;
  try {
    j = json::parse(io::ReadFile(sidecar_path));
    SaliencyArtifact a;
    auto& m = a.map;
    m.term.utterance_id = j.at("id").get<std::string>();
    const auto& t = j.at("term");
    m.term.term_key = t.at("key").get<std::string>();
    m.term.generated_form = t.at("generated_form").get<std::string>();
    m.term.foil_form = t.at("foil_form").get<std::string>();
    auto g = ParseGender(t.at("generated_gender").get<std::string>());
    if (!g) throw Error(ErrorCode::kInvalidArgument, "bad generated_gender");
    m.term.generated_gender = *g;
    m.n_masks = j.at("n_masks").get<std::size_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.keep_prob = j.at("keep_prob").get<double>();
    m.frame_hop_s = j.at("frame_hop_s").get<double>();
    m.bin_centers_hz = j.at("bin_centers_hz").get<std::vector<double>>();
    a.n_segments = j.at("segments").get<std::size_t>();
    a.segment_method = j.value("segment_method", std::string("grid"));
    a.fill.mode = ParseFillMode(j.at("fill").at("mode").get<std::string>());
    a.fill.constant = j.at("fill").at("constant").get<double>();
    a.flip = FlipFromJson(j.at("flip"));
    m.scores = io::ParseCsvMatrix(
        io::ReadFile(sidecar_path.parent_path() / j.at("scores_csv").get<std::string>()));
    if (m.scores.rows() != m.bin_centers_hz.size()) {
      throw Error(ErrorCode::kMixedShapes, "score matrix rows differ from bin centers");
    }
    return a;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed saliency sidecar " + sidecar_path.string() + ": " + e.what());
  }
}

std::vector<SaliencyArtifact> ReadArtifacts(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> sidecars;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") sidecars.push_back(e.path());
  }
  std::sort(sidecars.begin(), sidecars.end());
  std::vector<SaliencyArtifact> out;
  for (const auto& p : sidecars) out.push_back(ReadArtifact(p));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.map.term.utterance_id, a.map.term.term_key) <
           std::tie(b.map.term.utterance_id, b.map.term.term_key);
  });
  return out;
}

}  // namespace gaudit::attribution
