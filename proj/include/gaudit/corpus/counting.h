// include/gaudit/corpus/counting.h

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

#include <cstdint>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gaudit::corpus {

struct CorpusCounts {
  std::string word;
  std::uint64_t count = 0;
  bool operator==(const CorpusCounts&) const = default;
};

// Whole-word, case-insensitive occurrence counts over line-oriented text,
// one entry per requested word in lexicographic order. A requested "word"
// containing separators is matched as a word sequence within a line.
std::vector<CorpusCounts> CountOccurrences(std::istream& in,
                                           const std::set<std::string>& words);
std::vector<CorpusCounts> CountOccurrences(std::string_view text,
                                           const std::set<std::string>& words);
// Throws Error(kIo) if the file cannot be opened.
std::vector<CorpusCounts> CountOccurrences(const std::filesystem::path& corpus_path,
                                           const std::set<std::string>& words);

}  // namespace gaudit::corpus
