// src/cli/commands.cc

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

#include "gaudit/cli/commands.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaudit/analysis/frequency.h"
#include "gaudit/analysis/words.h"
#include "gaudit/attribution/occlusion.h"
#include "gaudit/attribution/persistence.h"
#include "gaudit/attribution/saliency.h"
#include "gaudit/attribution/segmentation.h"
#include "gaudit/attribution/spectrogram.h"
#include "gaudit/common/error.h"
#include "gaudit/common/hash.h"
#include "gaudit/common/io.h"
#include "gaudit/common/parallel.h"
#include "gaudit/common/text.h"
#include "gaudit/corpus/counting.h"
#include "gaudit/corpus/matching.h"
#include "gaudit/corpus/tokenizer.h"
#include "gaudit/metrics/contingency.h"
#include "gaudit/metrics/correlation.h"
#include "gaudit/metrics/preference.h"
#include "gaudit/metrics/prevalence.h"
#include "gaudit/oracle/lexicon.h"
#include "gaudit/oracle/synthetic.h"
#include "gaudit/oracle/wire.h"

namespace gaudit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Need(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing required path: ") + flag);
  }
  return value;
}

json Report(const std::string& command, const RunConfig& config, json hashes) {
  return {{"command", command}, {"config", ToJson(config)}, {"input_hashes", std::move(hashes)}};
}

void WriteReport(const RunConfig& config, const std::string& name, const json& report) {
  io::WriteFile(fs::path(config.paths.out) / (name + "_report.json"), report.dump(2) + "\n");
}

json OptionalNumber(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Benchmark rows, filtered annotations and their matches against the
// hypotheses, in benchmark order.
struct MatchedSet {
  corpus::Benchmark benchmark;
  std::vector<corpus::GenderTermAnnotation> annotations;
  std::vector<corpus::TermMatch> matches;
  std::size_t ambiguous = 0;
  std::size_t unmatched = 0;
  std::vector<std::string> warnings;
};

MatchedSet LoadAnnotations(const RunConfig& config, json& hashes) {
  MatchedSet set;
  const std::string bench = Need(config.paths.benchmark, "benchmark");
  set.benchmark = corpus::LoadBenchmark(bench);
  hashes["benchmark"] = HashFile(bench);
  corpus::FilterConfig filter;
  filter.category_whitelist = config.categories;
  if (!config.paths.articles.empty()) {
    filter.article_blocklist = corpus::LoadArticleBlocklist(config.paths.articles);
    hashes["articles"] = HashFile(config.paths.articles);
  }
  set.annotations = corpus::FilterSpeakerReferential(set.benchmark.entries, filter);
  return set;
}

void MatchAll(const RunConfig& config, const corpus::Tokenizer& tokenizer, MatchedSet& set,
              json& hashes) {
  const std::string hyp_path = Need(config.paths.hypotheses, "hypotheses");
  const auto hypotheses = corpus::LoadHypotheses(hyp_path);
  hashes["hypotheses"] = HashFile(hyp_path);
  for (const auto& a : set.annotations) {
    auto it = hypotheses.find(a.utterance_id);
    if (it == hypotheses.end()) {
      ++set.unmatched;
      set.warnings.push_back("no hypothesis for utterance '" + a.utterance_id + "'");
      continue;
    }
    corpus::MatchOutcome outcome;
    try {
      outcome = corpus::MatchTerm(a, it->second, tokenizer);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAlignment) throw;
      ++set.unmatched;
      set.warnings.push_back(a.Key() + ": " + e.what());
      continue;
    }
    switch (outcome.status) {
      case corpus::MatchStatus::kMatched:
        set.matches.push_back(std::move(*outcome.match));
        break;
      case corpus::MatchStatus::kAmbiguous:
        ++set.ambiguous;
        break;
      case corpus::MatchStatus::kNoMatch:
        ++set.unmatched;
        break;
    }
  }
  if (set.matches.empty()) set.warnings.push_back("no annotated term was matched in the hypotheses");
}

json MatchSummary(const MatchedSet& set) {
  json s = {{"annotations", set.annotations.size()},
            {"matched", set.matches.size()},
            {"ambiguous", set.ambiguous},
            {"unmatched", set.unmatched},
            {"gender_accuracy", nullptr}};
  if (!set.matches.empty()) s["gender_accuracy"] = corpus::GenderAccuracy(set.matches);
  return s;
}

json RowErrors(const corpus::Benchmark& benchmark) {
  json out = json::array();
  for (const auto& e : benchmark.errors) out.push_back({{"line", e.line}, {"message", e.message}});
  return out;
}

json TableJson(const metrics::ContingencyTable& t) {
  return {{"row_labels", t.row_labels},
          {"col_labels", t.col_labels},
          {"cells", t.cells},
          {"total", t.Total()}};
}

json ContingencyJson(const metrics::ContingencyResult& r) {
  json j = TableJson(r.table);
  j["ties"] = r.ties;
  j["excluded"] = r.excluded;
  return j;
}

// Audio paths in the benchmark are relative to the benchmark file.
fs::path AudioPath(const RunConfig& config, const std::string& audio) {
  fs::path p(audio);
  if (p.is_absolute()) return p;
  return fs::path(config.paths.benchmark).parent_path() / p;
}

class FeatureCache {
 public:
  FeatureCache(const RunConfig& config, const corpus::Benchmark& benchmark) : config_(config) {
    for (const auto& e : benchmark.entries) audio_[e.utterance.id] = e.utterance.audio_path;
  }

  const oracle::AcousticFeatures& Get(const std::string& id, json& hashes) {
    if (auto it = cache_.find(id); it != cache_.end()) return it->second;
    auto a = audio_.find(id);
    if (a == audio_.end()) throw Error(ErrorCode::kInvalidArgument, "unknown utterance '" + id + "'");
    const fs::path path = AudioPath(config_, a->second);
    hashes["audio"][a->second] = HashFile(path);
    return cache_.emplace(id, attribution::LoadFeatures(path)).first->second;
  }

 private:
  const RunConfig& config_;
  std::map<std::string, std::string> audio_;
  std::map<std::string, oracle::AcousticFeatures> cache_;
};

json PreferenceJson(const metrics::PreferenceRecord& r) {
  return {{"term_key", r.term_key},
          {"generated_gender", ToString(r.generated_gender)},
          {"mode", oracle::ToString(r.mode)},
          {"logp_generated", r.logp_generated},
          {"logp_foil", r.logp_foil},
          {"preference_generated", r.preference_generated},
          {"masculine_preference", r.masculine_preference}};
}

json SummaryJson(const metrics::PreferenceSummary& s) {
  json groups = json::array();
  for (const auto& g : s.groups) {
    groups.push_back({{"group", g.group}, {"n", g.n}, {"mean", g.mean}, {"stddev", g.stddev}});
  }
  return groups;
}

json GroupRateJson(const attribution::GroupRate& g) {
  return {{"group", g.group}, {"n", g.n}, {"n_flipped", g.n_flipped}, {"rate", g.rate}};
}

}  // namespace

std::unique_ptr<oracle::Oracle> MakeOracle(const OracleSpec& spec,
                                           std::span<const corpus::GenderTermAnnotation> annotations) {
  if (spec.kind == OracleKind::kAdapter) {
    return std::make_unique<oracle::ProcessOracle>(spec.adapter_command);
  }
  auto tokenizer = std::make_shared<const corpus::WordTokenizer>();
  oracle::GenderLexicon lexicon(annotations, *tokenizer);
  if (spec.kind == OracleKind::kPrior) {
    return std::make_unique<oracle::PriorOracle>(spec.synthetic.masculine_prior, spec.term_priors,
                                                 std::move(lexicon), tokenizer);
  }
  return std::make_unique<oracle::SyntheticOracle>(spec.synthetic, std::move(lexicon), tokenizer,
                                                   spec.threads);
}

json RunPrevalence(const RunConfig& config) {
  json hashes = json::object();
  MatchedSet set = LoadAnnotations(config, hashes);
  corpus::WordTokenizer tokenizer;
  MatchAll(config, tokenizer, set, hashes);

  std::set<std::string> words;
  for (const auto& m : set.matches) {
    words.insert(text::FoldCase(m.annotation.form_f));
    words.insert(text::FoldCase(m.annotation.form_m));
  }
  const std::string corpus_path = Need(config.paths.corpus, "corpus");
  const auto counts = corpus::CountOccurrences(fs::path(corpus_path), words);
  hashes["corpus"] = HashFile(corpus_path);
  const auto records = metrics::BuildPrevalenceRecords(set.matches, metrics::MakeCountTable(counts));
  const auto contingency = metrics::PrevalenceContingency(set.matches, records);

  json summary = MatchSummary(set);
  json rec = json::array();
  double sum = 0.0;
  std::size_t n_defined = 0;
  for (const auto& r : records) {
    const auto masc = r.MasculinePrevalence();
    if (masc) {
      sum += *masc;
      ++n_defined;
    }
    rec.push_back({{"term_key", r.term_key},
                   {"generated_gender", ToString(r.generated_gender)},
                   {"form_1", r.form_1},
                   {"form_2", r.form_2},
                   {"count_1", r.count_1},
                   {"count_2", r.count_2},
                   {"prevalence_1", OptionalNumber(r.prevalence_1)},
                   {"masculine_prevalence", OptionalNumber(masc)}});
  }
  summary["mean_masculine_prevalence"] =
      n_defined ? json(sum / static_cast<double>(n_defined)) : json(nullptr);

  json report = Report("prevalence", config, std::move(hashes));
  report["summary"] = std::move(summary);
  report["prevalence_records"] = std::move(rec);
  report["tables"] = {{"prevalence", ContingencyJson(contingency)}};
  report["row_errors"] = RowErrors(set.benchmark);
  report["warnings"] = set.warnings;
  WriteReport(config, "prevalence", report);
  return report;
}

json RunIlm(const RunConfig& config) {
  json hashes = json::object();
  MatchedSet set = LoadAnnotations(config, hashes);
  auto oracle = MakeOracle(config.oracle, set.annotations);
  MatchAll(config, oracle->tokenizer(), set, hashes);

  FeatureCache features(config, set.benchmark);
  std::vector<oracle::ScoreRequest> requests;
  requests.reserve(set.matches.size());
  for (std::size_t i = 0; i < set.matches.size(); ++i) {
    const auto& m = set.matches[i];
    requests.push_back(oracle::MakeScoreRequest(m, features.Get(m.annotation.utterance_id, hashes),
                                                std::to_string(i)));
  }
  const auto full = oracle->ScoreBatch(requests, oracle::ScoreMode::kFull);
  const auto ilm = oracle->ScoreBatch(requests, oracle::ScoreMode::kIlm);

  std::vector<metrics::PreferenceRecord> full_records, ilm_records;
  for (std::size_t i = 0; i < set.matches.size(); ++i) {
    full_records.push_back(metrics::MakePreferenceRecord(set.matches[i], full[i], oracle::ScoreMode::kFull));
    ilm_records.push_back(metrics::MakePreferenceRecord(set.matches[i], ilm[i], oracle::ScoreMode::kIlm));
  }

  json report = Report("ilm", config, std::move(hashes));
  report["summary"] = MatchSummary(set);
  json records = json::array();
  for (const auto& r : full_records) records.push_back(PreferenceJson(r));
  for (const auto& r : ilm_records) records.push_back(PreferenceJson(r));
  report["preference_records"] = std::move(records);

  std::vector<std::string> warnings = set.warnings;
  json summaries = json::object();
  if (!set.matches.empty()) {
    for (const auto& [name, recs] : {std::pair{"full", &full_records}, std::pair{"ilm", &ilm_records}}) {
      auto all = metrics::MasculinePreferenceSummary(*recs, metrics::GroupBy::kAll);
      auto by = metrics::MasculinePreferenceSummary(*recs, metrics::GroupBy::kGeneratedGender);
      json groups = SummaryJson(all);
      for (auto& g : SummaryJson(by)) groups.push_back(std::move(g));
      summaries[name] = std::move(groups);
      for (const auto& w : by.warnings) warnings.push_back(std::string(name) + ": " + w);
    }
  }
  report["masculine_preference"] = std::move(summaries);
  report["tables"] = {{"ilm", ContingencyJson(metrics::IlmContingency(full_records, ilm_records))}};

  json pearson = nullptr;
  if (full_records.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& r : full_records) xs.push_back(r.masculine_preference);
    for (const auto& r : ilm_records) ys.push_back(r.masculine_preference);
    try {
      pearson = metrics::Pearson(xs, ys);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefinedResult) throw;
      warnings.push_back(std::string("pearson undefined: ") + e.what());
    }
  } else {
    warnings.push_back("pearson undefined: fewer than two terms");
  }
  report["correlations"] = {{"pearson_full_ilm_masculine", pearson}};
  report["row_errors"] = RowErrors(set.benchmark);
  report["warnings"] = warnings;
  WriteReport(config, "ilm", report);
  return report;
}

json RunAttribute(const RunConfig& config) {
  attribution::ValidateSchedule(config.occlusion_schedule);
  json hashes = json::object();
  MatchedSet set = LoadAnnotations(config, hashes);
  auto oracle = MakeOracle(config.oracle, set.annotations);
  MatchAll(config, oracle->tokenizer(), set, hashes);

  std::stable_sort(set.matches.begin(), set.matches.end(), [](const auto& a, const auto& b) {
    if (a.annotation.utterance_id != b.annotation.utterance_id) {
      return a.annotation.utterance_id < b.annotation.utterance_id;
    }
    return a.Key() < b.Key();
  });

  // Load features up front so workers only read the cache.
  FeatureCache cache(config, set.benchmark);
  std::vector<const oracle::AcousticFeatures*> features;
  for (const auto& m : set.matches) features.push_back(&cache.Get(m.annotation.utterance_id, hashes));

  const fs::path dir = config.AttributionDir();
  fs::create_directories(dir);
  attribution::SegmentOptions seg_opts;
  seg_opts.method = config.segment_method;
  seg_opts.target_segments = config.segments;
  seg_opts.compactness = config.compactness;

  std::vector<attribution::SaliencyArtifact> artifacts(set.matches.size());
  ParallelFor(set.matches.size(), config.oracle.threads, [&](std::size_t i) {
    const auto& m = set.matches[i];
    const auto& f = *features[i];
    const auto segments = attribution::Segment(f, seg_opts);
    attribution::SaliencyOptions opts;
    opts.n_masks = config.n_masks;
    opts.keep_prob = config.keep_prob;
    opts.seed = SubstreamSeed(config.seed, m.Key());
    opts.fill = config.fill;
    auto& art = artifacts[i];
    art.map = attribution::ContrastiveSaliency(f, segments, *oracle, m, opts);
    art.flip = attribution::OcclusionFlip(f, art.map, *oracle, m, config.occlusion_schedule, config.fill);
    art.n_segments = static_cast<std::size_t>(segments.n_segments);
    art.segment_method = std::string(attribution::ToString(config.segment_method));
    art.fill = config.fill;
    attribution::WriteArtifact(dir, art);
  });

  json terms = json::array();
  std::vector<attribution::FlipResult> flips;
  std::vector<Gender> genders;
  for (const auto& art : artifacts) {
    const auto& t = art.map.term;
    terms.push_back({{"id", t.utterance_id},
                     {"term_key", t.term_key},
                     {"generated_form", t.generated_form},
                     {"foil_form", t.foil_form},
                     {"generated_gender", ToString(t.generated_gender)},
                     {"seed", art.map.seed},
                     {"n_segments", art.n_segments},
                     {"artifact", attribution::ArtifactStem(t)},
                     {"flipped", art.flip.flipped},
                     {"flip_fraction", OptionalNumber(art.flip.flip_fraction)},
                     {"baseline_margin", art.flip.baseline_margin}});
    flips.push_back(art.flip);
    genders.push_back(t.generated_gender);
  }

  json report = Report("attribute", config, std::move(hashes));
  report["summary"] = MatchSummary(set);
  report["terms"] = std::move(terms);
  std::vector<std::string> warnings = set.warnings;
  json flip_rate = nullptr;
  if (!flips.empty()) {
    auto rate = attribution::FlipRate(flips, genders);
    json by = json::array();
    for (const auto& g : rate.by_gender) by.push_back(GroupRateJson(g));
    flip_rate = {{"overall", GroupRateJson(rate.overall)}, {"by_gender", std::move(by)}};
    warnings.insert(warnings.end(), rate.warnings.begin(), rate.warnings.end());
  } else {
    warnings.push_back("flip rate undefined: no terms attributed");
  }
  report["flip_rate"] = std::move(flip_rate);
  report["row_errors"] = RowErrors(set.benchmark);
  report["warnings"] = warnings;
  WriteReport(config, "attribute", report);
  return report;
}

json RunAnalyze(const RunConfig& config) {
  const fs::path dir = config.AttributionDir();
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "attribution directory not found: " + dir.string());
  }
  const auto artifacts = attribution::ReadArtifacts(dir);
  json hashes = json::object();
  hashes["artifacts"] = json::object();
  for (const auto& a : artifacts) {
    const std::string stem = attribution::ArtifactStem(a.map.term);
    hashes["artifacts"][stem] = HashFile(dir / (stem + ".json"));
  }

  std::vector<std::string> warnings;
  std::vector<attribution::SaliencyMap> maps;
  std::vector<attribution::FlipResult> flips;
  std::vector<const attribution::SaliencyArtifact*> selected;
  for (const auto& a : artifacts) {
    flips.push_back(a.flip);
    if (config.flipped_only && !a.flip.flipped) continue;
    selected.push_back(&a);
    maps.push_back(a.map);
  }
  if (artifacts.empty()) warnings.push_back("no saliency artifacts in " + dir.string());

  json profiles = json::array();
  json band_stats = json::object();
  json peaks = json::object();
  for (auto group : {analysis::ProfileGroup::kAll, analysis::ProfileGroup::kFeminine,
                     analysis::ProfileGroup::kMasculine}) {
    const std::string name(analysis::ToString(group));
    analysis::FrequencyProfile profile;
    try {
      profile = analysis::BuildFrequencyProfile(maps, group);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefinedResult) throw;
      warnings.push_back("profile " + name + ": no examples");
      continue;
    }
    profiles.push_back({{"group", name},
                        {"n_examples", profile.n_examples},
                        {"bin_centers_hz", profile.bin_centers_hz},
                        {"values", profile.values}});
    json stats = json::object();
    for (const auto& [band_name, band] :
         {std::pair{"pitch", config.pitch_band}, std::pair{"formant", config.formant_band}}) {
      try {
        const auto s = analysis::ComputeBandStats(profile, band);
        stats[band_name] = {{"band_hz", {s.band.low_hz, s.band.high_hz}},
                            {"n_bins", s.n_bins},
                            {"mean", s.mean},
                            {"max", s.max},
                            {"argmax_bin", s.argmax_bin},
                            {"argmax_hz", s.argmax_hz}};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyBand) throw;
        stats[band_name] = nullptr;
        warnings.push_back("band " + std::string(band_name) + " for " + name + ": " + e.what());
      }
    }
    band_stats[name] = std::move(stats);
    const auto pr = analysis::FormantPeaks(profile, 2, config.formant_band);
    json list = json::array();
    for (const auto& p : pr.peaks) list.push_back({{"bin", p.bin}, {"hz", p.hz}, {"value", p.value}});
    peaks[name] = std::move(list);
    for (const auto& w : pr.warnings) warnings.push_back("peaks " + name + ": " + w);
  }

  json pitch_rate = nullptr;
  if (!artifacts.empty()) {
    const auto& centers = artifacts.front().map.bin_centers_hz;
    for (const auto& a : artifacts) {
      if (a.map.bin_centers_hz != centers) {
        throw Error(ErrorCode::kMixedShapes, "artifacts use different frequency axes");
      }
    }
    try {
      pitch_rate = analysis::PitchInclusionRate(flips, centers, config.pitch_band);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefinedResult) throw;
      warnings.push_back("pitch inclusion rate undefined: no flipped examples");
    }
  } else {
    warnings.push_back("pitch inclusion rate undefined: no flipped examples");
  }

  json word_scores = json::array();
  json word_errors = json::array();
  json top_words = json::array();
  json shares = nullptr;
  if (!config.paths.alignments.empty()) {
    const auto alignments = analysis::LoadAlignments(config.paths.alignments);
    hashes["alignments"] = HashFile(config.paths.alignments);
    std::vector<analysis::UtteranceWordScores> all;
    for (const auto* a : selected) {
      const auto& t = a->map.term;
      auto it = alignments.find(t.utterance_id);
      if (it == alignments.end()) {
        warnings.push_back("no alignment for utterance '" + t.utterance_id + "'");
        continue;
      }
      const auto result = analysis::ComputeWordScores(a->map, it->second.words, a->map.frame_hop_s);
      for (const auto& e : result.errors) word_errors.push_back({{"id", t.utterance_id}, {"error", e}});
      json words = json::array();
      for (const auto& w : result.scores) {
        words.push_back({{"word", w.word},
                         {"start_s", w.start_s},
                         {"end_s", w.end_s},
                         {"score", w.score},
                         {"rank", w.rank}});
      }
      word_scores.push_back({{"id", t.utterance_id},
                             {"term_key", t.term_key},
                             {"flipped", a->flip.flipped},
                             {"words", std::move(words)}});
      all.push_back({t.utterance_id, a->flip.flipped, result.scores});
    }
    const auto summary = analysis::SummarizeTopWords(all, config.flipped_only);
    for (const auto& [w, n] : summary.top_words) top_words.push_back({{"word", w}, {"count", n}});
    shares = {{"n_utterances", summary.n_utterances},
              {"i_count", summary.i_count},
              {"self_referential_count", summary.self_referential_count},
              {"i_share", summary.i_share},
              {"self_referential_share", summary.self_referential_share}};
    warnings.insert(warnings.end(), summary.warnings.begin(), summary.warnings.end());
  }

  json report = Report("analyze", config, std::move(hashes));
  report["summary"] = {{"n_artifacts", artifacts.size()}, {"n_selected", selected.size()}};
  report["frequency_profiles"] = std::move(profiles);
  report["band_stats"] = std::move(band_stats);
  report["formant_peaks"] = std::move(peaks);
  report["pitch_inclusion_rate"] = std::move(pitch_rate);
  report["word_scores"] = std::move(word_scores);
  report["word_errors"] = std::move(word_errors);
  report["top_words"] = std::move(top_words);
  report["self_referential_shares"] = std::move(shares);
  report["warnings"] = warnings;
  WriteReport(config, "analyze", report);
  return report;
}

}  // namespace gaudit::cli
