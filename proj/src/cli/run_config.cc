// src/cli/run_config.cc

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

#include "gaudit/cli/run_config.h"

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"

namespace gaudit::cli {

using nlohmann::json;

namespace {

std::string KindName(OracleKind kind) {
  switch (kind) {
    case OracleKind::kSynthetic: return "synthetic";
    case OracleKind::kPrior: return "prior";
    case OracleKind::kAdapter: return "adapter";
  }
  return "synthetic";
}

json BandJson(const analysis::Band& b) { return json::array({b.low_hz, b.high_hz}); }

analysis::Band BandFrom(const json& j) {
  auto v = j.get<std::vector<double>>();
  if (v.size() != 2 || !(v[0] < v[1])) {
    throw Error(ErrorCode::kInvalidArgument, "band must be [low, high] with low < high");
  }
  return {v[0], v[1]};
}

std::pair<double, double> PairFrom(const json& j) {
  auto v = j.get<std::vector<double>>();
  if (v.size() != 2) throw Error(ErrorCode::kInvalidArgument, "expected a [low, high] pair");
  return {v[0], v[1]};
}

void RejectUnknown(const json& j, std::initializer_list<std::string_view> known, std::string_view where) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown " + std::string(where) + " field '" + key + "'");
    }
  }
}

}  // namespace

void ApplyOracleFlag(OracleSpec& spec, const std::string& flag) {
  if (flag == "synthetic") {
    spec.kind = OracleKind::kSynthetic;
  } else if (flag == "prior" || flag == "constant") {
    spec.kind = OracleKind::kPrior;
  } else if (flag.rfind("adapter:", 0) == 0 && flag.size() > 8) {
    spec.kind = OracleKind::kAdapter;
    spec.adapter_command = flag.substr(8);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle must be synthetic, prior, constant or adapter:<command>, got '" + flag + "'");
  }
}

std::filesystem::path RunConfig::AttributionDir() const {
  if (!paths.attribution_dir.empty()) return paths.attribution_dir;
  return std::filesystem::path(paths.out) / "saliency";
}

json ToJson(const RunConfig& c) {
  const auto& s = c.oracle.synthetic;
  return {
      {"seed", c.seed},
      {"n_masks", c.n_masks},
      {"keep_prob", c.keep_prob},
      {"segments", c.segments},
      {"segment_method", attribution::ToString(c.segment_method)},
      {"compactness", c.compactness},
      {"occlusion_schedule", c.occlusion_schedule},
      {"pitch_band", BandJson(c.pitch_band)},
      {"formant_band", BandJson(c.formant_band)},
      {"fill", {{"mode", attribution::ToString(c.fill.mode)}, {"constant", c.fill.constant}}},
      {"categories", c.categories},
      {"flipped_only", c.flipped_only},
      {"oracle",
       {{"type", KindName(c.oracle.kind)},
        {"cue_band_hz", json::array({s.cue_band_hz.first, s.cue_band_hz.second})},
        {"cue_time_s", json::array({s.cue_time_s.first, s.cue_time_s.second})},
        {"energy_threshold", s.energy_threshold},
        {"masculine_prior", s.masculine_prior},
        {"sharpness", s.sharpness},
        {"term_priors", c.oracle.term_priors},
        {"command", c.oracle.adapter_command},
        {"threads", c.oracle.threads}}},
      {"paths",
       {{"benchmark", c.paths.benchmark},
        {"hypotheses", c.paths.hypotheses},
        {"corpus", c.paths.corpus},
        {"articles", c.paths.articles},
        {"out", c.paths.out},
        {"attribution_dir", c.paths.attribution_dir},
        {"alignments", c.paths.alignments}}},
  };
}

RunConfig RunConfigFromJson(const json& j) {
  RunConfig c;
  try {
    RejectUnknown(j,
                  {"seed", "n_masks", "keep_prob", "segments", "segment_method", "compactness",
                   "occlusion_schedule", "pitch_band", "formant_band", "fill", "categories",
                   "flipped_only", "oracle", "paths"},
                  "config");
    c.seed = j.value("seed", c.seed);
    c.n_masks = j.value("n_masks", c.n_masks);
    c.keep_prob = j.value("keep_prob", c.keep_prob);
    c.segments = j.value("segments", c.segments);
    if (j.contains("segment_method")) {
      c.segment_method = attribution::ParseSegmentMethod(j.at("segment_method").get<std::string>());
    }
    c.compactness = j.value("compactness", c.compactness);
    c.occlusion_schedule = j.value("occlusion_schedule", c.occlusion_schedule);
    if (j.contains("pitch_band")) c.pitch_band = BandFrom(j.at("pitch_band"));
    if (j.contains("formant_band")) c.formant_band = BandFrom(j.at("formant_band"));
    if (j.contains("fill")) {
      const auto& f = j.at("fill");
      if (f.contains("mode")) c.fill.mode = attribution::ParseFillMode(f.at("mode").get<std::string>());
      c.fill.constant = f.value("constant", c.fill.constant);
    }
    c.categories = j.value("categories", c.categories);
    c.flipped_only = j.value("flipped_only", c.flipped_only);
    if (j.contains("oracle")) {
      const auto& o = j.at("oracle");
      RejectUnknown(o,
                    {"type", "cue_band_hz", "cue_time_s", "energy_threshold", "masculine_prior",
                     "sharpness", "term_priors", "command", "threads"},
                    "oracle");
      auto& s = c.oracle.synthetic;
      if (o.contains("cue_band_hz")) s.cue_band_hz = PairFrom(o.at("cue_band_hz"));
      if (o.contains("cue_time_s")) s.cue_time_s = PairFrom(o.at("cue_time_s"));
      s.energy_threshold = o.value("energy_threshold", s.energy_threshold);
      s.masculine_prior = o.value("masculine_prior", s.masculine_prior);
      s.sharpness = o.value("sharpness", s.sharpness);
      c.oracle.term_priors = o.value("term_priors", c.oracle.term_priors);
      c.oracle.threads = o.value("threads", c.oracle.threads);
      const std::string type = o.value("type", std::string("synthetic"));
      if (type == "adapter") {
        c.oracle.kind = OracleKind::kAdapter;
        c.oracle.adapter_command = o.value("command", std::string());
        if (c.oracle.adapter_command.empty()) {
          throw Error(ErrorCode::kInvalidArgument, "adapter oracle needs a command");
        }
      } else {
        ApplyOracleFlag(c.oracle, type);
      }
    }
    if (j.contains("paths")) {
      const auto& p = j.at("paths");
      RejectUnknown(p, {"benchmark", "hypotheses", "corpus", "articles", "out", "attribution_dir", "alignments"},
                    "paths");
      c.paths.benchmark = p.value("benchmark", c.paths.benchmark);
      c.paths.hypotheses = p.value("hypotheses", c.paths.hypotheses);
      c.paths.corpus = p.value("corpus", c.paths.corpus);
      c.paths.articles = p.value("articles", c.paths.articles);
      c.paths.out = p.value("out", c.paths.out);
      c.paths.attribution_dir = p.value("attribution_dir", c.paths.attribution_dir);
      c.paths.alignments = p.value("alignments", c.paths.alignments);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("invalid run config: ") + e.what());
  }
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(io::ReadFile(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, "cannot parse config " + path.string() + ": " + e.what());
  }
  return RunConfigFromJson(j);
}

}  // namespace gaudit::cli
