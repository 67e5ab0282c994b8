// src/analysis/words.cc

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

#include "gaudit/analysis/words.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"
#include "gaudit/common/text.h"

namespace gaudit::analysis {

using nlohmann::json;

Alignment AlignmentFromJson(const json& j) {
  try {
    Alignment a;
    a.id = j.at("id").get<std::string>();
    for (const auto& w : j.at("words")) {
      a.words.push_back({w.at("word").get<std::string>(), w.at("start_s").get<double>(),
                         w.at("end_s").get<double>()});
    }
    return a;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed alignment: ") + e.what());
  }
}

std::map<std::string, Alignment> LoadAlignments(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(io::ReadFile(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, "cannot parse " + path.string() + ": " + e.what());
  }
  std::map<std::string, Alignment> out;
  auto add = [&](const json& item) {
    auto a = AlignmentFromJson(item);
    if (out.contains(a.id)) throw Error(ErrorCode::kDuplicateId, "duplicate alignment id '" + a.id + "'");
    out.emplace(a.id, std::move(a));
  };
  if (j.is_array()) {
    for (const auto& item : j) add(item);
  } else {
    add(j);
  }
  return out;
}

std::string NormalizeWord(std::string_view word) {
  return text::FoldCase(text::NormalizeApostrophes(text::Trim(word)));
}

bool IsSelfReferential(std::string_view word) { return kSelfReferential.contains(NormalizeWord(word)); }

std::pair<long, long> FrameWindow(double start_s, double end_s, double frame_hop_s) {
  // Slack absorbs representation error in values like 0.3 / 0.01.
  constexpr double kSlack = 1e-9;
  return {static_cast<long>(std::floor(start_s / frame_hop_s + kSlack)),
          static_cast<long>(std::ceil(end_s / frame_hop_s - kSlack))};
}

WordScoreResult ComputeWordScores(const attribution::SaliencyMap& map,
                                  std::span<const AlignmentSegment> alignment, double frame_hop_s) {
  if (alignment.empty()) throw Error(ErrorCode::kInvalidArgument, "empty alignment");
  if (!(frame_hop_s > 0.0)) throw Error(ErrorCode::kInvalidArgument, "frame hop must be positive");
  WordScoreResult out;
  const auto n_frames = static_cast<long>(map.scores.cols());
  for (const auto& seg : alignment) {
    if (!(seg.start_s >= 0.0) || !(seg.end_s > seg.start_s)) {
      out.errors.push_back("word '" + seg.word + "' has invalid times [" + io::FormatDouble(seg.start_s) +
                           ", " + io::FormatDouble(seg.end_s) + ")");
      continue;
    }
    auto [lo, hi] = FrameWindow(seg.start_s, seg.end_s, frame_hop_s);
    lo = std::max(lo, 0L);
    hi = std::min(hi, n_frames);
    if (lo >= hi) {
      out.errors.push_back("word '" + seg.word + "' lies outside the saliency map");
      continue;
    }
    double best = map.scores(0, static_cast<std::size_t>(lo));
    for (std::size_t b = 0; b < map.scores.rows(); ++b) {
      for (long f = lo; f < hi; ++f) best = std::max(best, map.scores(b, static_cast<std::size_t>(f)));
    }
    out.scores.push_back({seg.word, seg.start_s, seg.end_s, best, 0});
  }
  std::stable_sort(out.scores.begin(), out.scores.end(), [](const WordScore& a, const WordScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.start_s < b.start_s;
  });
  for (std::size_t i = 0; i < out.scores.size(); ++i) out.scores[i].rank = i + 1;
  return out;
}

TopWordSummary SummarizeTopWords(std::span<const UtteranceWordScores> all_scores, bool flipped_only) {
  TopWordSummary s;
  std::map<std::string, std::size_t> freq;
  for (const auto& u : all_scores) {
    if (flipped_only && !u.flipped) continue;
    auto top = std::find_if(u.scores.begin(), u.scores.end(), [](const WordScore& w) { return w.rank == 1; });
    if (top == u.scores.end()) {
      s.warnings.push_back("utterance " + u.id + " has no ranked words");
      continue;
    }
    const auto word = NormalizeWord(top->word);
    ++s.n_utterances;
    s.i_count += word == "i" ? 1 : 0;
    s.self_referential_count += kSelfReferential.contains(word) ? 1 : 0;
    ++freq[word];
  }
  if (s.n_utterances > 0) {
    const double n = static_cast<double>(s.n_utterances);
    s.i_share = 100.0 * static_cast<double>(s.i_count) / n;
    s.self_referential_share = 100.0 * static_cast<double>(s.self_referential_count) / n;
  } else {
    s.warnings.push_back("no utterances selected for the top-word summary");
  }
  s.top_words.assign(freq.begin(), freq.end());
  std::stable_sort(s.top_words.begin(), s.top_words.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return s;
}

}  // namespace gaudit::analysis
