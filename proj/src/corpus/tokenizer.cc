// src/corpus/tokenizer.cc

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

#include "gaudit/corpus/tokenizer.h"

#include <cctype>

#include "gaudit/common/text.h"

namespace gaudit::corpus {

TokenSeq Tokenizer::Tokens(std::string_view text) const {
  TokenSeq out;
  for (auto& piece : Tokenize(text)) out.push_back(std::move(piece.text));
  return out;
}

std::vector<TokenPiece> WordTokenizer::Tokenize(std::string_view s) const {
  std::vector<TokenPiece> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80 && std::isspace(c)) {
      ++i;
    } else if (c < 0x80 && std::ispunct(c)) {
      out.push_back({std::string(1, s[i]), i, i + 1});
      ++i;
    } else {
      std::size_t begin = i;
      while (i < s.size()) {
        auto d = static_cast<unsigned char>(s[i]);
        if (d < 0x80 && (std::isspace(d) || std::ispunct(d))) break;
        ++i;
      }
      out.push_back({std::string(s.substr(begin, i - begin)), begin, i});
    }
  }
  return out;
}

std::vector<TokenPiece> ChunkTokenizer::Tokenize(std::string_view s) const {
  std::vector<TokenPiece> out;
  for (const auto& word : WordTokenizer().Tokenize(s)) {
    for (std::size_t b = word.begin; b < word.end; b += width_) {
      std::size_t e = std::min(word.end, b + width_);
      out.push_back({std::string(s.substr(b, e - b)), b, e});
    }
  }
  return out;
}

}  // namespace gaudit::corpus
