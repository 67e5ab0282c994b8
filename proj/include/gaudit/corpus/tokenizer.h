// include/gaudit/corpus/tokenizer.h

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

namespace gaudit::corpus {

using TokenSeq = std::vector<std::string>;

// A token and the half-open byte range of the text it covers.
struct TokenPiece {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Target-side tokenization supplied by the model behind an oracle.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::vector<TokenPiece> Tokenize(std::string_view text) const = 0;

  TokenSeq Tokens(std::string_view text) const;
};

// Word-level tokenizer: words split on whitespace and punctuation, with each
// punctuation character kept as its own token.
class WordTokenizer final : public Tokenizer {
 public:
  std::vector<TokenPiece> Tokenize(std::string_view text) const override;
};

// Splits each word into fixed-width byte chunks; stands in for subword
// vocabularies when exercising multi-token candidates.
class ChunkTokenizer final : public Tokenizer {
 public:
  explicit ChunkTokenizer(std::size_t width) : width_(width == 0 ? 1 : width) {}
  std::vector<TokenPiece> Tokenize(std::string_view text) const override;

 private:
  std::size_t width_;
};

}  // namespace gaudit::corpus
