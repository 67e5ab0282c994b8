// tests/oracle/synthetic_test.cc

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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaudit/cli/commands.h"
#include "gaudit/common/error.h"
#include "gaudit/metrics/preference.h"
#include "gaudit/oracle/synthetic.h"
#include "support/synth.h"

namespace gaudit::oracle {
namespace {

using testing::Annotation;

const std::vector<corpus::GenderTermAnnotation> kAnns{
    Annotation("u1", "diventata", "diventato", Gender::kFeminine),
    Annotation("u2", "stanca", "stanco", Gender::kMasculine)};

// Direct evaluation: enumerate cells, average, then the logistic in plain
// (non log-space) form.
double BruteFeminineProbability(const AcousticFeatures& f, const SyntheticOracleConfig& c) {
  double sum = 0.0;
  int n = 0;
  for (std::size_t b = 0; b < f.n_bins(); ++b) {
    for (std::size_t t = 0; t < f.n_frames(); ++t) {
      const double hz = f.bin_centers_hz[b];
      const double s = static_cast<double>(t) * f.frame_hop_s;
      if (hz >= c.cue_band_hz.first && hz <= c.cue_band_hz.second && s >= c.cue_time_s.first &&
          s < c.cue_time_s.second) {
        sum += f.matrix(b, t);
        ++n;
      }
    }
  }
  if (n == 0) return 1.0 - c.masculine_prior;
  return 1.0 / (1.0 + std::exp(-c.sharpness * (sum / n - c.energy_threshold)));
}

TEST(SyntheticScore, MatchesDirectEvaluation) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = testing::RandomFeatures(rng, 80, 40, 0.0, 1.0);
    SyntheticOracleConfig c;
    c.sharpness = 1.0 + 10.0 * u(rng);
    c.energy_threshold = u(rng);
    const double lo = 200.0 + 2000.0 * u(rng);
    c.cue_band_hz = {lo, lo + 100.0 + 1500.0 * u(rng)};
    const double t0 = 0.3 * u(rng);
    c.cue_time_s = {t0, t0 + 0.01 + 0.1 * u(rng)};
    const auto p = SyntheticScore(f, c);
    EXPECT_NEAR(p.p_feminine, BruteFeminineProbability(f, c), 1e-12);
    EXPECT_NEAR(p.p_feminine + p.p_masculine, 1.0, 1e-12);
    EXPECT_NEAR(std::exp(p.log_feminine), p.p_feminine, 1e-15);
  }
}

TEST(SyntheticScore, CueRaisesFeminineProbability) {
  std::mt19937_64 rng(1);
  auto planted = testing::PlantCue(rng, 80, 50, 20, 30, 20, 30);
  const auto on = SyntheticScore(planted.features, planted.config);
  EXPECT_EQ(on.cue_cells, 100u);
  EXPECT_GT(on.p_feminine, 0.99);
  auto off = testing::RandomFeatures(rng, 80, 50);
  EXPECT_LT(SyntheticScore(off, planted.config).p_feminine, 0.01);
}

TEST(SyntheticScore, WindowBoundaries) {
  std::mt19937_64 rng(2);
  auto f = testing::RandomFeatures(rng, 80, 50);
  SyntheticOracleConfig c;
  // Band closed on bin centers, time half-open on frame starts.
  c.cue_band_hz = {f.bin_centers_hz[10], f.bin_centers_hz[12]};
  c.cue_time_s = {f.FrameTime(5), f.FrameTime(8)};
  EXPECT_EQ(SyntheticScore(f, c).cue_cells, 9u);
}

TEST(SyntheticScore, EmptyWindowInsideExtentFallsBackToPrior) {
  std::mt19937_64 rng(3);
  auto f = testing::RandomFeatures(rng, 80, 50);
  SyntheticOracleConfig c;
  c.cue_band_hz = {f.bin_centers_hz[10] + 1e-6, f.bin_centers_hz[11] - 1e-6};
  const auto p = SyntheticScore(f, c);
  EXPECT_EQ(p.cue_cells, 0u);
  EXPECT_DOUBLE_EQ(p.p_masculine, c.masculine_prior);
}

TEST(SyntheticScore, WindowOutsideExtentIsEmptyCue) {
  std::mt19937_64 rng(4);
  auto f = testing::RandomFeatures(rng, 80, 10);  // 0.1 s
  SyntheticOracleConfig c;
  c.cue_time_s = {0.2, 0.3};
  try {
    SyntheticScore(f, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCue);
  }
  c.cue_time_s = {0.0, 0.05};
  c.cue_band_hz = {9000.0, 9500.0};
  EXPECT_THROW(SyntheticScore(f, c), Error);
}

TEST(SyntheticScore, ExtremeEnergiesStayFinite) {
  std::mt19937_64 rng(5);
  auto f = testing::RandomFeatures(rng, 80, 50);
  SyntheticOracleConfig c;
  c.sharpness = 1e6;
  for (auto& v : f.matrix.values()) v = 1e3;
  auto p = SyntheticScore(f, c);
  EXPECT_TRUE(std::isfinite(p.log_masculine));
  EXPECT_LT(p.log_masculine, -1e8);
  EXPECT_EQ(p.log_feminine, 0.0);
}

TEST(SyntheticConfig, Validate) {
  SyntheticOracleConfig c;
  c.masculine_prior = 1.0;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.cue_band_hz = {1000, 900};
  EXPECT_THROW(c.Validate(), Error);
}

class IlmContract : public ::testing::TestWithParam<double> {};

TEST_P(IlmContract, IlmPreferenceEqualsPriorRegardlessOfFeatures) {
  const double prior = GetParam();
  SyntheticOracleConfig c;
  c.masculine_prior = prior;
  auto oracle = testing::MakeSynthetic(c, kAnns);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& ann = kAnns[trial % 2];
    const auto gen = trial % 3 ? Gender::kFeminine : Gender::kMasculine;
    auto m = testing::MatchFor(ann, gen, oracle->tokenizer());
    auto f = testing::RandomFeatures(rng, 80, 40, -5.0, 5.0);
    auto r = oracle->Score(MakeScoreRequest(m, f, "r"), ScoreMode::kIlm);
    auto rec = metrics::MakePreferenceRecord(m, r, ScoreMode::kIlm);
    EXPECT_NEAR(rec.masculine_preference, prior, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Priors, IlmContract, ::testing::Values(0.5, 0.7, 0.9));

TEST(SyntheticOracle, MultiTokenCandidatesCarryGenderOnFirstToken) {
  auto tok = std::make_shared<const corpus::ChunkTokenizer>(3);
  GenderLexicon lex(kAnns, *tok);
  SyntheticOracleConfig c;
  SyntheticOracle oracle(c, lex, tok);
  auto m = testing::MatchFor(kAnns[0], Gender::kFeminine, *tok);
  ASSERT_EQ(m.GeneratedTokens().size(), 3u);
  std::mt19937_64 rng(7);
  auto f = testing::RandomFeatures(rng, 80, 40);
  auto r = oracle.Score(MakeScoreRequest(m, f, "a"), ScoreMode::kFull);
  const auto p = SyntheticScore(f, c);
  EXPECT_DOUBLE_EQ(r.candidate_logprobs[0], p.log_feminine);
  EXPECT_DOUBLE_EQ(r.candidate_logprobs[1], p.log_masculine);
  EXPECT_EQ(GenderTokenLogprobs({"a", "b"}, Gender::kMasculine, p),
            (std::vector<double>{p.log_masculine, 0.0}));
}

TEST(SyntheticOracle, UnknownCandidateFails) {
  auto oracle = testing::MakeSynthetic({}, kAnns);
  std::mt19937_64 rng(8);
  ScoreRequest r;
  r.id = "x";
  r.features = testing::RandomFeatures(rng, 80, 40);
  r.candidates = {{"ignoto"}, {"nato"}};
  EXPECT_THROW(oracle->Score(r, ScoreMode::kFull), Error);
}

TEST(SyntheticOracle, ParallelBatchMatchesSerial) {
  SyntheticOracleConfig c;
  cli::OracleSpec spec;
  spec.synthetic = c;
  spec.threads = 4;
  auto parallel = cli::MakeOracle(spec, kAnns);
  auto serial = testing::MakeSynthetic(c, kAnns);
  std::mt19937_64 rng(9);
  std::vector<ScoreRequest> reqs;
  for (int i = 0; i < 40; ++i) {
    auto m = testing::MatchFor(kAnns[i % 2], i % 3 ? Gender::kFeminine : Gender::kMasculine,
                               serial->tokenizer());
    reqs.push_back(MakeScoreRequest(m, testing::RandomFeatures(rng, 80, 40, 0.0, 1.0), std::to_string(i)));
  }
  auto a = parallel->ScoreBatch(reqs, ScoreMode::kFull);
  auto b = serial->ScoreBatch(reqs, ScoreMode::kFull);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].candidate_logprobs, b[i].candidate_logprobs);
}

TEST(PriorOracle, IgnoresFeaturesAndMode) {
  auto oracle = testing::MakePrior(0.7, kAnns, {{"Stanco", 0.4}});
  std::mt19937_64 rng(10);
  for (auto mode : {ScoreMode::kFull, ScoreMode::kIlm}) {
    for (int i = 0; i < 5; ++i) {
      auto m0 = testing::MatchFor(kAnns[0], Gender::kFeminine, oracle->tokenizer());
      auto m1 = testing::MatchFor(kAnns[1], Gender::kMasculine, oracle->tokenizer());
      auto f = testing::RandomFeatures(rng, 80, 40, -3.0, 3.0);
      auto r0 = metrics::MakePreferenceRecord(m0, oracle->Score(MakeScoreRequest(m0, f, "a"), mode), mode);
      auto r1 = metrics::MakePreferenceRecord(m1, oracle->Score(MakeScoreRequest(m1, f, "b"), mode), mode);
      EXPECT_NEAR(r0.masculine_preference, 0.7, 1e-12);
      EXPECT_NEAR(r1.masculine_preference, 0.4, 1e-12);
    }
  }
  EXPECT_THROW(testing::MakePrior(1.5, kAnns), Error);
}

}  // namespace
}  // namespace gaudit::oracle
