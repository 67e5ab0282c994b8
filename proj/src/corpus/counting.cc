// src/corpus/counting.cc

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

#include "gaudit/corpus/counting.h"

#include <fstream>
#include <map>
#include <sstream>

#include "gaudit/common/error.h"
#include "gaudit/common/text.h"

namespace gaudit::corpus {

std::vector<CorpusCounts> CountOccurrences(std::istream& in,
                                           const std::set<std::string>& words) {
  // Single-word targets go through a hash lookup per corpus word; multi-word
  // targets fall back to a sequence scan per line.
  std::map<std::string, std::vector<std::string>> single;  // folded -> requested
  std::vector<std::pair<std::string, std::vector<std::string>>> multi;
  std::map<std::string, std::uint64_t> counts;
  for (const auto& w : words) {
    counts[w] = 0;
    auto folded = text::FoldedWords(w);
    if (folded.size() == 1) {
      single[folded.front()].push_back(w);
    } else if (folded.size() > 1) {
      multi.emplace_back(w, std::move(folded));
    }
  }

  std::string line;
  while (std::getline(in, line)) {
    auto line_words = text::FoldedWords(line);
    for (const auto& lw : line_words) {
      if (auto it = single.find(lw); it != single.end()) {
        for (const auto& requested : it->second) ++counts[requested];
      }
    }
    for (const auto& [requested, seq] : multi) {
      counts[requested] += text::FindSequence(line_words, seq).size();
    }
  }

  std::vector<CorpusCounts> out;
  out.reserve(counts.size());
  for (const auto& [w, c] : counts) out.push_back({w, c});
  return out;
}

std::vector<CorpusCounts> CountOccurrences(std::string_view text,
                                           const std::set<std::string>& words) {
  std::istringstream in{std::string(text)};
  return CountOccurrences(in, words);
}

std::vector<CorpusCounts> CountOccurrences(const std::filesystem::path& corpus_path,
                                           const std::set<std::string>& words) {
  std::ifstream in(corpus_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read corpus: " + corpus_path.string());
  return CountOccurrences(in, words);
}

}  // namespace gaudit::corpus
