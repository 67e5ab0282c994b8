// tools/gaudit_main.cc

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

// gaudit: gender-bias audit of speech translation outputs.
//
//   gaudit prevalence --benchmark b.tsv --hypotheses h.tsv --corpus train.txt --out out/
//   gaudit ilm        --benchmark b.tsv --hypotheses h.tsv --oracle synthetic
//   gaudit attribute  --benchmark b.tsv --hypotheses h.tsv --seed 7 --n-masks 512
//   gaudit analyze    --out out/ --alignments align.json

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaudit/attribution/saliency.h"
#include "gaudit/attribution/segmentation.h"
#include "gaudit/cli/commands.h"
#include "gaudit/cli/run_config.h"
#include "gaudit/common/error.h"
#include "gaudit/common/text.h"

namespace {

using gaudit::Error;
using gaudit::ErrorCode;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_masks;
  std::optional<double> keep_prob;
  std::optional<std::size_t> segments;
  std::string segment_method;
  std::string schedule;
  std::string pitch_band;
  std::string formant_band;
  std::string fill;
  std::string oracle;
  std::optional<std::size_t> threads;
  std::optional<std::string> out, benchmark, hypotheses, corpus, articles, attribution_dir, alignments;
  bool all_terms = false;
};

std::vector<double> ParseList(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& part : gaudit::text::Split(s, ',')) {
    const auto t = gaudit::text::Trim(part);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, std::string("bad number '") + t + "' in " + what);
    }
  }
  return out;
}

gaudit::analysis::Band ParseBand(const std::string& s, const char* what) {
  const auto v = ParseList(s, what);
  if (v.size() != 2 || !(v[0] < v[1])) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be LOW,HIGH with LOW < HIGH");
  }
  return {v[0], v[1]};
}

gaudit::cli::RunConfig BuildConfig(const Overrides& o) {
  gaudit::cli::RunConfig c;
  if (!o.config.empty()) c = gaudit::cli::LoadRunConfig(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.n_masks) c.n_masks = *o.n_masks;
  if (o.keep_prob) c.keep_prob = *o.keep_prob;
  if (o.segments) c.segments = *o.segments;
  if (!o.segment_method.empty()) c.segment_method = gaudit::attribution::ParseSegmentMethod(o.segment_method);
  if (!o.schedule.empty()) c.occlusion_schedule = ParseList(o.schedule, "--schedule");
  if (!o.pitch_band.empty()) c.pitch_band = ParseBand(o.pitch_band, "--pitch-band");
  if (!o.formant_band.empty()) c.formant_band = ParseBand(o.formant_band, "--formant-band");
  if (!o.fill.empty()) c.fill.mode = gaudit::attribution::ParseFillMode(o.fill);
  if (!o.oracle.empty()) gaudit::cli::ApplyOracleFlag(c.oracle, o.oracle);
  if (o.threads) c.oracle.threads = *o.threads;
  if (o.out) c.paths.out = *o.out;
  if (o.benchmark) c.paths.benchmark = *o.benchmark;
  if (o.hypotheses) c.paths.hypotheses = *o.hypotheses;
  if (o.corpus) c.paths.corpus = *o.corpus;
  if (o.articles) c.paths.articles = *o.articles;
  if (o.attribution_dir) c.paths.attribution_dir = *o.attribution_dir;
  if (o.alignments) c.paths.alignments = *o.alignments;
  if (o.all_terms) c.flipped_only = false;
  return c;
}

void AddOptions(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "RunConfig JSON; flags override its fields");
  cmd->add_option("--seed", o.seed, "Run seed");
  cmd->add_option("--n-masks", o.n_masks, "Random masks per term");
  cmd->add_option("--keep-prob", o.keep_prob, "Probability of keeping a segment");
  cmd->add_option("--segments", o.segments, "Target number of segments");
  cmd->add_option("--segment-method", o.segment_method, "grid or cluster");
  cmd->add_option("--schedule", o.schedule, "Occlusion fractions, comma separated");
  cmd->add_option("--pitch-band", o.pitch_band, "LOW,HIGH in Hz");
  cmd->add_option("--formant-band", o.formant_band, "LOW,HIGH in Hz");
  cmd->add_option("--fill", o.fill, "bin_mean or constant");
  cmd->add_option("--oracle", o.oracle, "synthetic, prior, constant or adapter:<command>");
  cmd->add_option("--threads", o.threads, "Worker threads");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--benchmark", o.benchmark, "Benchmark TSV");
  cmd->add_option("--hypotheses", o.hypotheses, "Hypotheses TSV (id, text)");
  cmd->add_option("--corpus", o.corpus, "Training corpus, one sentence per line");
  cmd->add_option("--articles", o.articles, "Article blocklist");
  cmd->add_option("--attribution-dir", o.attribution_dir, "Saliency artifact directory");
  cmd->add_option("--alignments", o.alignments, "Word alignment JSON");
  cmd->add_flag("--all-terms", o.all_terms, "Analyze unflipped terms too");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gender-bias audit for speech translation"};
  app.require_subcommand(1);
  Overrides o;
  auto* prevalence = app.add_subcommand("prevalence", "Training-data prevalence of generated forms");
  auto* ilm = app.add_subcommand("ilm", "Full-model vs internal language model preferences");
  auto* attribute = app.add_subcommand("attribute", "Contrastive saliency and occlusion flips");
  auto* analyze = app.add_subcommand("analyze", "Frequency and word-level analysis of saliency");
  for (auto* cmd : {prevalence, ilm, attribute, analyze}) AddOptions(cmd, o);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = BuildConfig(o);
    nlohmann::json report;
    if (prevalence->parsed()) {
      report = gaudit::cli::RunPrevalence(config);
    } else if (ilm->parsed()) {
      report = gaudit::cli::RunIlm(config);
    } else if (attribute->parsed()) {
      report = gaudit::cli::RunAttribute(config);
    } else {
      report = gaudit::cli::RunAnalyze(config);
    }
    for (const auto& w : report.value("warnings", nlohmann::json::array())) {
      std::cerr << "warning: " << w.get<std::string>() << "\n";
    }
    std::cout << report.at("command").get<std::string>() << " report written to " << config.paths.out
              << "\n";
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", {{"code", gaudit::ToString(e.code())}, {"message", e.what()}}}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 0;
}
