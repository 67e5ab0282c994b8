// tests/acceptance/acceptance_main.cc

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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gaudit/analysis/frequency.h"
#include "gaudit/analysis/words.h"
#include "gaudit/attribution/occlusion.h"
#include "gaudit/attribution/saliency.h"
#include "gaudit/attribution/segmentation.h"
#include "gaudit/cli/commands.h"
#include "gaudit/common/io.h"
#include "gaudit/corpus/matching.h"
#include "gaudit/corpus/tokenizer.h"
#include "gaudit/metrics/correlation.h"
#include "gaudit/metrics/preference.h"
#include "gaudit/metrics/prevalence.h"
#include "support/brute.h"
#include "support/bundle.h"
#include "support/golden.h"
#include "support/synth.h"

namespace gaudit {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Fixture {
  corpus::WordTokenizer tok;
};

Outcome MetricCorrectness() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> lp(-50.0, 0.0), shift(-100.0, 100.0), u(0.0, 1.0);
  std::normal_distribution<double> n;
  double worst = 0.0, worst_sym = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t a = rng() % 10000, b = rng() % 10000;
    if (a + b == 0) b = 1;
    worst = std::max(worst, std::abs(metrics::Prevalence(a, b) - brute::Prevalence(a, b)));

    const double x = lp(rng), y = lp(rng), c = shift(rng);
    worst = std::max(worst, std::abs(metrics::Preference(x, y) - brute::Preference(x, y)));
    worst_sym = std::max(worst_sym, std::abs(metrics::Preference(x, y) + metrics::Preference(y, x) - 1.0));
    worst_sym = std::max(worst_sym, std::abs(metrics::Preference(x + c, y + c) - metrics::Preference(x, y)));

    // Gender accuracy over matches with random generated genders.
    const std::size_t len = 1 + rng() % 30;
    std::vector<corpus::TermMatch> matches(len);
    std::vector<bool> correct(len);
    for (std::size_t k = 0; k < len; ++k) {
      matches[k].annotation.gold_gender = rng() % 2 ? Gender::kFeminine : Gender::kMasculine;
      matches[k].generated_gender = rng() % 2 ? Gender::kFeminine : Gender::kMasculine;
      correct[k] = matches[k].annotation.gold_gender == matches[k].generated_gender;
    }
    worst = std::max(worst, std::abs(corpus::GenderAccuracy(matches) - brute::Accuracy(correct)));

    const std::size_t m = 2 + rng() % 50;
    std::vector<double> xs(m), ys(m);
    const double rho = n(rng);
    for (std::size_t k = 0; k < m; ++k) {
      xs[k] = n(rng);
      ys[k] = rho * xs[k] + n(rng);
    }
    worst = std::max(worst, std::abs(metrics::Pearson(xs, ys) - brute::Pearson(xs, ys)));
  }
  o.Require(worst <= 1e-9, "max deviation from brute force " + io::FormatDouble(worst));
  o.Require(worst_sym <= 1e-12, "antisymmetry/shift deviation " + io::FormatDouble(worst_sym));
  if (o.pass) o.detail = "max dev " + io::FormatDouble(worst) + ", symmetry dev " + io::FormatDouble(worst_sym);
  return o;
}

Outcome IlmContract() {
  Outcome o;
  Fixture fx;
  std::mt19937_64 rng(102);
  std::vector<corpus::GenderTermAnnotation> anns;
  std::vector<corpus::TermMatch> matches;
  std::vector<oracle::AcousticFeatures> feats;
  for (int i = 0; i < 40; ++i) {
    const auto id = "u" + std::to_string(i);
    anns.push_back(testing::Annotation(id, "forma" + std::to_string(i) + "a", "forma" + std::to_string(i) + "o",
                                       Gender::kFeminine));
    matches.push_back(testing::MatchFor(anns.back(), i % 2 ? Gender::kFeminine : Gender::kMasculine, fx.tok));
    feats.push_back(testing::RandomFeatures(rng, 80, 30 + rng() % 40, 0.0, 1.5));
  }
  for (double p : {0.5, 0.7, 0.9}) {
    oracle::SyntheticOracleConfig cfg;
    cfg.masculine_prior = p;
    auto model = testing::MakeSynthetic(cfg, anns);
    for (std::size_t i = 0; i < matches.size(); ++i) {
      const auto r = model->Score(oracle::MakeScoreRequest(matches[i], feats[i], "q"), oracle::ScoreMode::kIlm);
      const auto rec = metrics::MakePreferenceRecord(matches[i], r, oracle::ScoreMode::kIlm);
      o.Require(std::abs(rec.masculine_preference - p) <= 1e-9,
                "ILM masculine preference " + io::FormatDouble(rec.masculine_preference) + " for prior " +
                    io::FormatDouble(p));
    }
  }
  // Encoder-ignoring oracle with per-term priors: FULL and ILM coincide.
  std::map<std::string, double> priors;
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (const auto& a : anns) priors[a.form_m] = u(rng);
  auto prior = testing::MakePrior(0.8, anns, priors);
  std::vector<double> full, ilm;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto req = oracle::MakeScoreRequest(matches[i], feats[i], "q");
    full.push_back(metrics::MakePreferenceRecord(matches[i], prior->Score(req, oracle::ScoreMode::kFull),
                                                 oracle::ScoreMode::kFull)
                       .masculine_preference);
    ilm.push_back(metrics::MakePreferenceRecord(matches[i], prior->Score(req, oracle::ScoreMode::kIlm),
                                                oracle::ScoreMode::kIlm)
                      .masculine_preference);
  }
  const double r = metrics::Pearson(full, ilm);
  o.Require(std::abs(r - 1.0) <= 1e-9, "pearson(FULL, ILM) = " + io::FormatDouble(r));
  if (o.pass) o.detail = "pearson(FULL, ILM) = " + io::FormatDouble(r);
  return o;
}

// 80 bins x 104 frames; GRID with 104 segments gives 10x8 tiles and the cue
// fills one tile (80 cells, 0.96 % of the grid).
Outcome AttributionRecovery() {
  Outcome o;
  Fixture fx;
  std::mt19937_64 rng(103);
  const std::size_t kBins = 80, kFrames = 104;
  int top_hits = 0, first_step = 0;
  double worst_share = 1.0;
  for (int u = 0; u < 30; ++u) {
    const std::size_t bi = rng() % 8, tj = rng() % 13;
    auto cue = testing::PlantCue(rng, kBins, kFrames, bi * 10, bi * 10 + 10, tj * 8, tj * 8 + 8);
    auto ann = testing::Annotation("u" + std::to_string(u), "stanca", "stanco", Gender::kFeminine);
    auto model = testing::MakeSynthetic(cue.config, {ann});
    const auto match = testing::MatchFor(ann, Gender::kFeminine, fx.tok);
    const auto seg = attribution::Segment(cue.features, {.target_segments = 104});
    const auto map = attribution::ContrastiveSaliency(
        cue.features, seg, *model, match, {.n_masks = 512, .seed = static_cast<std::uint64_t>(1000 + u)});
    const auto top = static_cast<int>(
        std::max_element(map.segment_scores.begin(), map.segment_scores.end()) - map.segment_scores.begin());
    bool overlaps = false;
    for (std::size_t b = 0; b < kBins; ++b) {
      for (std::size_t t = 0; t < kFrames; ++t) overlaps = overlaps || (seg.labels(b, t) == top && cue.Contains(b, t));
    }
    top_hits += overlaps ? 1 : 0;

    const auto flip = attribution::OcclusionFlip(cue.features, map, *model, match);
    if (flip.flipped && *flip.flip_fraction == attribution::kDefaultSchedule.front()) {
      ++first_step;
      std::size_t inside = 0;
      for (const auto& [b, t] : *flip.occluded_cells) inside += cue.Contains(b, t) ? 1 : 0;
      worst_share = std::min(worst_share, static_cast<double>(inside) / flip.occluded_cells->size());
    }
  }
  o.Require(top_hits >= 28, "top segment overlapped the cue in " + std::to_string(top_hits) + "/30");
  o.Require(first_step == 30, "flipped at the first step in " + std::to_string(first_step) + "/30");
  o.Require(worst_share >= 0.9, "worst in-cue share of occluded cells " + io::FormatDouble(worst_share));
  if (o.pass) {
    o.detail = "top-segment hits " + std::to_string(top_hits) + "/30, first-step flips " +
               std::to_string(first_step) + "/30, min in-cue share " + io::FormatDouble(worst_share);
  }
  return o;
}

Outcome NullControl() {
  Outcome o;
  Fixture fx;
  std::mt19937_64 rng(104);
  const std::size_t n_masks = 512;
  const double bound = 3.0 / std::sqrt(static_cast<double>(n_masks));
  double worst = 0.0;
  std::size_t flips = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const auto f = testing::RandomFeatures(rng, 80, 104, 0.0, 1.5);
    auto ann = testing::Annotation("n" + std::to_string(seed), "pronta", "pronto", Gender::kFeminine);
    auto model = testing::MakePrior(0.8, {ann});
    const auto seg = attribution::Segment(f, {.target_segments = 100});
    for (Gender g : {Gender::kFeminine, Gender::kMasculine}) {
      const auto match = testing::MatchFor(ann, g, fx.tok);
      const auto map = attribution::ContrastiveSaliency(f, seg, *model, match,
                                                        {.n_masks = n_masks, .seed = static_cast<std::uint64_t>(seed)});
      for (double s : map.segment_scores) worst = std::max(worst, std::abs(s));
      flips += attribution::OcclusionFlip(f, map, *model, match).flipped ? 1 : 0;
    }
  }
  o.Require(worst <= bound, "max |segment score| " + io::FormatDouble(worst) + " > " + io::FormatDouble(bound));
  o.Require(flips == 0, std::to_string(flips) + " flips");
  if (o.pass) o.detail = "max |segment score| " + io::FormatDouble(worst) + ", flip rate 0";
  return o;
}

std::map<std::string, std::string> ReadTree(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), dir).string()] = io::ReadFile(e.path());
  }
  return out;
}

Outcome Determinism() {
  Outcome o;
  const auto a = testing::BundleConfig("accept_det_a"), b = testing::BundleConfig("accept_det_b");
  cli::RunAttribute(a);
  cli::RunAttribute(b);
  const auto ta = ReadTree(a.AttributionDir()), tb = ReadTree(b.AttributionDir());
  o.Require(!ta.empty(), "no artifacts written");
  o.Require(ta == tb, "artifacts differ between runs");
  if (o.pass) o.detail = std::to_string(ta.size()) + " artifact files byte-identical";
  return o;
}

Outcome AggregationCorrectness() {
  Outcome o;
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<std::string> vocab{"I", "my", "Me", "dog", "today", "house", "I'm"};
  std::vector<attribution::SaliencyMap> maps;
  std::vector<attribution::FlipResult> flips;
  std::vector<analysis::UtteranceWordScores> words;
  std::map<std::string, std::size_t> tally;
  std::size_t n_top = 0, n_i = 0, n_self = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t frames = 20 + rng() % 60;
    maps.push_back(testing::RandomSaliencyMap(rng, 80, frames, rng() % 2 ? Gender::kFeminine : Gender::kMasculine,
                                              "m" + std::to_string(i)));
    const auto& m = maps.back();
    attribution::FlipResult fr;
    fr.flipped = rng() % 4 != 0;
    if (fr.flipped) {
      std::vector<attribution::Cell> cells;
      for (std::size_t k = 0, n = 1 + rng() % 5; k < n; ++k) cells.emplace_back(rng() % 80, rng() % frames);
      std::sort(cells.begin(), cells.end());
      fr.occluded_cells = cells;
    }
    flips.push_back(fr);

    std::vector<analysis::AlignmentSegment> align;
    double t = 0.0;
    const double span = static_cast<double>(frames) * 0.01;
    while (t < span) {
      const double len = 0.013 + 0.1 * u(rng);
      align.push_back({vocab[rng() % vocab.size()], t, std::min(t + len, span)});
      t += len + 0.02 * u(rng);
    }
    const auto ws = analysis::ComputeWordScores(m, align, 0.01);
    o.Require(ws.errors.empty(), "unexpected word errors");
    o.Require(ws.scores.size() == align.size(), "word count");
    // Brute-force scores, then the same ordering rule by selection.
    std::vector<std::pair<double, double>> brute_scores;  // (score, start)
    for (const auto& a : align) brute_scores.emplace_back(brute::WordScore(m, a.start_s, a.end_s, 0.01), a.start_s);
    for (std::size_t r = 0; r < ws.scores.size(); ++r) {
      const auto& w = ws.scores[r];
      o.Require(w.rank == r + 1, "rank numbering");
      o.Require(w.score == brute::WordScore(m, w.start_s, w.end_s, 0.01), "word score");
      std::size_t better = 0;
      for (const auto& [s, st] : brute_scores) better += (s > w.score || (s == w.score && st < w.start_s)) ? 1 : 0;
      o.Require(better == r, "word rank");
    }
    words.push_back({m.term.utterance_id, fr.flipped, ws.scores});
    if (fr.flipped) {
      const auto top = analysis::NormalizeWord(ws.scores.front().word);
      ++n_top;
      ++tally[top];
      n_i += top == "i" ? 1 : 0;
      n_self += (top == "i" || top == "my" || top == "me" || top == "i'm") ? 1 : 0;
    }
  }
  for (auto g : {analysis::ProfileGroup::kAll, analysis::ProfileGroup::kFeminine, analysis::ProfileGroup::kMasculine}) {
    const auto p = analysis::BuildFrequencyProfile(maps, g);
    const auto b = brute::Profile(maps, g);
    for (std::size_t k = 0; k < b.size(); ++k) o.Require(std::abs(p.values[k] - b[k]) <= 1e-12, "frequency profile");
    for (auto band : {analysis::kPitchBand, analysis::kFormantBand}) {
      const auto s = analysis::ComputeBandStats(p, band);
      const auto bs = brute::Band(p.values, p.bin_centers_hz, band.low_hz, band.high_hz);
      o.Require(s.n_bins == bs.n && s.argmax_bin == bs.argmax && s.max == bs.max, "band stats tallies");
      o.Require(std::abs(s.mean - bs.mean) <= 1e-12, "band stats mean");
    }
  }
  const auto summary = analysis::SummarizeTopWords(words, true);
  o.Require(summary.n_utterances == n_top && summary.i_count == n_i && summary.self_referential_count == n_self,
            "top word tallies");
  o.Require(std::abs(summary.i_share - 100.0 * n_i / n_top) <= 1e-12, "I share");
  o.Require(std::abs(summary.self_referential_share - 100.0 * n_self / n_top) <= 1e-12, "self share");
  std::map<std::string, std::size_t> got(summary.top_words.begin(), summary.top_words.end());
  o.Require(got == tally, "top word counts");
  const auto rate = analysis::PitchInclusionRate(flips, maps[0].bin_centers_hz);
  o.Require(std::abs(rate - brute::PitchInclusion(flips, maps[0].bin_centers_hz, analysis::kPitchBand.low_hz,
                                                  analysis::kPitchBand.high_hz)) <= 1e-12,
            "pitch inclusion rate");
  if (o.pass) o.detail = "50 maps, " + std::to_string(n_top) + " flipped";
  return o;
}

// Saliency of a cue centered at `hz` over a few utterances, summarised as
// (formant max, pitch max).
std::pair<double, double> BandMaxima(std::mt19937_64& rng, double hz, std::uint64_t seed) {
  Fixture fx;
  const auto centers = oracle::MelBinCenters();
  std::size_t c = 0;
  for (std::size_t b = 0; b < centers.size(); ++b) {
    if (std::abs(centers[b] - hz) < std::abs(centers[c] - hz)) c = b;
  }
  const std::size_t lo = c >= 2 ? c - 2 : 0;
  std::vector<attribution::SaliencyMap> maps;
  for (int u = 0; u < 3; ++u) {
    const std::size_t t0 = 10 + rng() % 60;
    auto cue = testing::PlantCue(rng, 80, 100, lo, lo + 5, t0, t0 + 10);
    auto ann = testing::Annotation("b" + std::to_string(u), "nata", "nato", Gender::kFeminine);
    auto model = testing::MakeSynthetic(cue.config, {ann});
    const auto seg = attribution::Segment(cue.features, {.target_segments = 100});
    maps.push_back(attribution::ContrastiveSaliency(cue.features, seg, *model,
                                                    testing::MatchFor(ann, Gender::kFeminine, fx.tok),
                                                    {.n_masks = 256, .seed = seed * 10 + u}));
  }
  const auto p = analysis::BuildFrequencyProfile(maps, analysis::ProfileGroup::kAll);
  return {analysis::ComputeBandStats(p, analysis::kFormantBand).max,
          analysis::ComputeBandStats(p, analysis::kPitchBand).max};
}

Outcome BandConstruction() {
  Outcome o;
  std::mt19937_64 rng(106);
  for (std::uint64_t run = 0; run < 5; ++run) {
    const auto [f1, p1] = BandMaxima(rng, 1000.0, run);
    o.Require(f1 > p1, "1000 Hz cue: formant max " + io::FormatDouble(f1) + " <= pitch max " + io::FormatDouble(p1));
    const auto [f2, p2] = BandMaxima(rng, 150.0, run + 100);
    o.Require(p2 > f2, "150 Hz cue: pitch max " + io::FormatDouble(p2) + " <= formant max " + io::FormatDouble(f2));
  }
  if (o.pass) o.detail = "5 runs per cue position";
  return o;
}

Outcome ReportGoldens() {
  Outcome o;
  const auto c = testing::BundleConfig("accept_golden");
  const std::vector<std::pair<std::string, std::function<nlohmann::json()>>> runs{
      {"prevalence", [&] { return cli::RunPrevalence(c); }},
      {"ilm", [&] { return cli::RunIlm(c); }},
      {"attribute", [&] { return cli::RunAttribute(c); }},
      {"analyze", [&] { return cli::RunAnalyze(c); }}};
  for (const auto& [name, run] : runs) {
    const auto want =
        nlohmann::json::parse(io::ReadFile(std::string(GAUDIT_GOLDEN_DIR) + "/" + name + "_report.json"));
    std::vector<std::string> diffs;
    testing::JsonDiff(want, testing::StripVolatile(run()), 1e-9, "", diffs);
    o.Require(diffs.empty(), name + (diffs.empty() ? "" : diffs.front()));
  }
  if (o.pass) o.detail = "4 reports match";
  return o;
}

}  // namespace
}  // namespace gaudit

int main() {
  struct Criterion {
    const char* name;
    std::function<gaudit::Outcome()> run;
    double budget_s;  // 0 = no time limit
  };
  const std::vector<Criterion> criteria{
      {"metric correctness", gaudit::MetricCorrectness, 10.0},
      {"ILM contract", gaudit::IlmContract, 5.0},
      {"attribution recovery", gaudit::AttributionRecovery, 120.0},
      {"null control", gaudit::NullControl, 0.0},
      {"determinism", gaudit::Determinism, 0.0},
      {"aggregation correctness", gaudit::AggregationCorrectness, 0.0},
      {"band construction", gaudit::BandConstruction, 0.0},
      {"report goldens", gaudit::ReportGoldens, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = gaudit::Clock::now();
    gaudit::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(gaudit::Clock::now() - start).count();
    if (c.budget_s > 0.0 && secs > c.budget_s && out.pass) {
      out.pass = false;
      out.detail = "over the " + gaudit::io::FormatDouble(c.budget_s) + " s budget";
    }
    std::printf("%s %s (%.2f s): %s\n", out.pass ? "PASS" : "FAIL", c.name, secs, out.detail.c_str());
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
