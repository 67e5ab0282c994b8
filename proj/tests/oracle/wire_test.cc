// tests/oracle/wire_test.cc

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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gaudit/common/error.h"
#include "gaudit/corpus/benchmark.h"
#include "gaudit/oracle/wire.h"
#include "support/synth.h"

namespace gaudit::oracle {
namespace {

using nlohmann::json;

const std::vector<corpus::GenderTermAnnotation> kAnns{
    testing::Annotation("u1", "nata", "nato", Gender::kFeminine),
    testing::Annotation("u2", "stanca", "stanco", Gender::kMasculine)};

std::vector<json> Lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

ScoreRequest Req(const std::string& id, std::mt19937_64& rng, const std::string& form) {
  ScoreRequest r;
  r.id = id;
  r.features = testing::RandomFeatures(rng, 80, 40, 0.0, 1.0);
  r.prefix_tokens = {"sono"};
  r.candidates = {{form}, {form == "nata" ? "nato" : "nata"}};
  return r;
}

TEST(Wire, FeaturesRoundTripExactly) {
  std::mt19937_64 rng(1);
  auto f = testing::RandomFeatures(rng, 7, 5, -30.0, 3.0);
  auto back = wire::DecodeFeatures(json::parse(wire::EncodeFeatures(f).dump()));
  EXPECT_EQ(back.matrix, f.matrix);
  EXPECT_EQ(back.bin_centers_hz, f.bin_centers_hz);
  EXPECT_EQ(back.frame_hop_s, f.frame_hop_s);
}

TEST(Wire, ScoreRequestRoundTrip) {
  std::mt19937_64 rng(2);
  auto r = Req("q1", rng, "nata");
  auto [back, mode] = wire::DecodeScoreRequest(wire::EncodeScoreRequest(r, ScoreMode::kIlm));
  EXPECT_EQ(mode, ScoreMode::kIlm);
  EXPECT_EQ(back.id, "q1");
  EXPECT_EQ(back.candidates, r.candidates);
  EXPECT_EQ(back.prefix_tokens, r.prefix_tokens);
  EXPECT_EQ(back.features.matrix, r.features.matrix);
}

TEST(Wire, FeaturesPathUsesDefaultAxis) {
  json j = {{"op", "score"},
            {"id", "p"},
            {"candidates", {{"nata"}, {"nato"}}},
            {"features_path", testing::FixturePath("bundle/features/b01.csv")}};
  auto [r, mode] = wire::DecodeScoreRequest(j);
  EXPECT_EQ(mode, ScoreMode::kFull);
  EXPECT_EQ(r.features.n_bins(), 80u);
  EXPECT_EQ(r.features.n_frames(), 50u);
  EXPECT_EQ(r.features.bin_centers_hz, MelBinCenters());
  EXPECT_EQ(r.features.frame_hop_s, 0.01);
}

TEST(Wire, ErrorReplyIsTransportError) {
  try {
    wire::DecodeResponse({{"id", "x"}, {"error", "model crashed"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransport);
    EXPECT_NE(std::string(e.what()).find("model crashed"), std::string::npos);
  }
  EXPECT_THROW(wire::DecodeResponse({{"candidate_logprobs", {-1.0}}}), Error);
  EXPECT_THROW(wire::DecodeScoreRequest({{"id", "x"}, {"candidates", {{"a"}}}}), Error);
}

TEST(ServeOracle, AnswersProtocol) {
  auto oracle = testing::MakeSynthetic({}, kAnns);
  std::mt19937_64 rng(3);
  std::ostringstream req;
  req << json{{"op", "hello"}, {"id", "h"}}.dump() << "\n";
  req << json{{"op", "tokenize"}, {"id", "t"}, {"text", "sono nata."}}.dump() << "\n";
  std::vector<ScoreRequest> reqs;
  for (int i = 0; i < 3; ++i) {
    reqs.push_back(Req("s" + std::to_string(i), rng, i % 2 ? "nato" : "nata"));
    req << wire::EncodeScoreRequest(reqs.back(), ScoreMode::kFull).dump() << "\n";
  }
  req << json{{"op", "score"}, {"id", "bad"}, {"candidates", {{"ignoto"}, {"nato"}}},
              {"features", wire::EncodeFeatures(reqs[0].features)}}.dump()
      << "\n";
  req << json{{"op", "flush"}}.dump() << "\n";
  req << "not json\n";

  std::istringstream in(req.str());
  std::ostringstream out;
  ServeOracle(*oracle, in, out, {.max_in_flight = 16, .reverse_order = true});
  auto replies = Lines(out.str());
  ASSERT_EQ(replies.size(), 7u);
  EXPECT_EQ(replies[0]["max_in_flight"], 16);
  ASSERT_EQ(replies[1]["tokens"].size(), 3u);
  EXPECT_EQ(replies[1]["tokens"][2]["text"], ".");
  EXPECT_EQ(replies[1]["tokens"][1]["begin"], 5);
  // Reverse order: the failing request first, then s2, s1, s0.
  EXPECT_EQ(replies[2]["id"], "bad");
  EXPECT_TRUE(replies[2].contains("error"));
  for (int i = 0; i < 3; ++i) {
    auto r = wire::DecodeResponse(replies[5 - i]);
    EXPECT_EQ(r.id, "s" + std::to_string(i));
    EXPECT_EQ(r.candidate_logprobs, oracle->Score(reqs[i], ScoreMode::kFull).candidate_logprobs);
  }
  EXPECT_TRUE(replies[6].contains("error"));
}

TEST(ServeOracle, DrainsAtMaxInFlightAndEof) {
  auto oracle = testing::MakeSynthetic({}, kAnns);
  std::mt19937_64 rng(4);
  std::ostringstream req;
  for (int i = 0; i < 5; ++i) {
    req << wire::EncodeScoreRequest(Req("r" + std::to_string(i), rng, "nata"), ScoreMode::kIlm).dump() << "\n";
  }
  std::istringstream in(req.str());
  std::ostringstream out;
  ServeOracle(*oracle, in, out, {.max_in_flight = 2});
  auto replies = Lines(out.str());
  ASSERT_EQ(replies.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(replies[i]["id"], "r" + std::to_string(i));
}

std::string AdapterCommand(const std::string& extra = "") {
  return std::string(GAUDIT_ADAPTER_PATH) + " --benchmark " +
         testing::FixturePath("bundle/benchmark.tsv") + " " + extra;
}

std::vector<corpus::GenderTermAnnotation> BundleAnnotations() {
  auto b = corpus::LoadBenchmark(testing::FixturePath("bundle/benchmark.tsv"));
  return corpus::FilterSpeakerReferential(b.entries, {});
}

TEST(ProcessOracle, MatchesInProcessOracleWithReorderedReplies) {
  ProcessOracle remote(AdapterCommand("--reverse --max-in-flight 3"));
  EXPECT_EQ(remote.MaxInFlight(), 3u);
  auto local = testing::MakeSynthetic({}, BundleAnnotations());
  EXPECT_EQ(remote.tokenizer().Tokens("Oggi sono nata, qui"), local->tokenizer().Tokens("Oggi sono nata, qui"));

  std::mt19937_64 rng(5);
  std::vector<ScoreRequest> reqs;
  for (int i = 0; i < 8; ++i) {
    auto r = Req("p" + std::to_string(i), rng, i % 2 ? "nato" : "nata");
    if (i % 3 == 0) {
      for (std::size_t t = 20; t < 30; ++t) {
        for (std::size_t b = 0; b < 80; ++b) r.features.matrix(b, t) = 2.0;
      }
    }
    reqs.push_back(std::move(r));
  }
  for (auto mode : {ScoreMode::kFull, ScoreMode::kIlm}) {
    auto a = remote.ScoreBatch(reqs, mode);
    auto b = local->ScoreBatch(reqs, mode);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].id, reqs[i].id);
      EXPECT_EQ(a[i].candidate_logprobs, b[i].candidate_logprobs);
    }
  }
  // An adapter-side failure surfaces as a transport error and the channel
  // stays usable.
  auto bad = reqs[0];
  bad.candidates = {{"ignoto"}, {"nato"}};
  try {
    remote.Score(bad, ScoreMode::kFull);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransport);
  }
  EXPECT_EQ(remote.Score(reqs[1], ScoreMode::kFull).candidate_logprobs,
            local->Score(reqs[1], ScoreMode::kFull).candidate_logprobs);
}

TEST(ProcessOracle, DeadAdapterIsTransportError) {
  try {
    ProcessOracle remote("exit 3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransport);
  }
}

}  // namespace
}  // namespace gaudit::oracle
