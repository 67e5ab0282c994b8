// include/gaudit/analysis/words.h

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
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gaudit/attribution/saliency.h"

namespace gaudit::analysis {

struct AlignmentSegment {
  std::string word;
  double start_s = 0.0;
  double end_s = 0.0;
};

struct Alignment {
  std::string id;
  std::vector<AlignmentSegment> words;
};

// {"id": .., "words": [{"word": .., "start_s": .., "end_s": ..}, ..]}
Alignment AlignmentFromJson(const nlohmann::json& j);
// A file holding one alignment object or an array of them, keyed by id.
std::map<std::string, Alignment> LoadAlignments(const std::filesystem::path& path);

// Source words that refer back to the speaker.
inline const std::set<std::string> kSelfReferential = {"i", "i'd", "i've", "i'm", "my", "me", "myself"};

// Case-folded with typographic apostrophes mapped to ASCII.
std::string NormalizeWord(std::string_view word);
bool IsSelfReferential(std::string_view word);

struct WordScore {
  std::string word;
  double start_s = 0.0;
  double end_s = 0.0;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based
};

struct WordScoreResult {
  std::vector<WordScore> scores;  // rank order
  std::vector<std::string> errors;
};

// Frame window of a word: [floor(start / hop), ceil(end / hop)).
std::pair<long, long> FrameWindow(double start_s, double end_s, double frame_hop_s);

// Word score is the maximum cell over its frame window (all bins). Ranked by
// descending score, ties by earlier start. Words with invalid times or whose
// window misses the map are reported in `errors`. Throws
// Error(kInvalidArgument) for an empty alignment.
WordScoreResult ComputeWordScores(const attribution::SaliencyMap& map,
                                  std::span<const AlignmentSegment> alignment, double frame_hop_s);

struct UtteranceWordScores {
  std::string id;
  bool flipped = false;
  std::vector<WordScore> scores;
};

struct TopWordSummary {
  std::size_t n_utterances = 0;
  std::size_t i_count = 0;
  std::size_t self_referential_count = 0;
  double i_share = 0.0;                // percent
  double self_referential_share = 0.0;  // percent
  // Rank-1 word frequencies, most frequent first, ties alphabetical.
  std::vector<std::pair<std::string, std::size_t>> top_words;
  std::vector<std::string> warnings;
};

TopWordSummary SummarizeTopWords(std::span<const UtteranceWordScores> all_scores, bool flipped_only);

}  // namespace gaudit::analysis
