// include/gaudit/common/text.h

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
#include <string>
#include <string_view>
#include <vector>

namespace gaudit::text {

// A word in a larger string, as a half-open byte range.
struct WordSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Lowercases ASCII letters and the Latin-1 supplement block (U+00C0..U+00DE,
// except U+00D7). Other bytes pass through unchanged.
std::string FoldCase(std::string_view s);

// Uppercase counterpart of FoldCase over the same character ranges.
std::string UpperCase(std::string_view s);

// Replaces typographic apostrophes (U+2018, U+2019, U+02BC) with '\''.
std::string NormalizeApostrophes(std::string_view s);

// Splits on whitespace and ASCII punctuation. Bytes >= 0x80 count as word
// characters so accented letters stay inside their word.
std::vector<WordSpan> SplitWords(std::string_view s);

// Case-folded words of `s`.
std::vector<std::string> FoldedWords(std::string_view s);

// Start indices of every occurrence of `needle` as a contiguous run inside
// `haystack`.
std::vector<std::size_t> FindSequence(const std::vector<std::string>& haystack,
                                      const std::vector<std::string>& needle);

std::string Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);

}  // namespace gaudit::text
