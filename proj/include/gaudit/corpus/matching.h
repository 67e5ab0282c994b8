// include/gaudit/corpus/matching.h

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
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gaudit/corpus/benchmark.h"
#include "gaudit/corpus/tokenizer.h"

namespace gaudit::corpus {

struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::size_t size() const { return end - start; }
  bool operator==(const TokenSpan&) const = default;
};

struct TermMatch {
  GenderTermAnnotation annotation;
  std::string hypothesis;
  std::string generated_form;
  Gender generated_gender = Gender::kMasculine;
  std::string foil_form;
  TokenSpan term_token_span;
  // Tokenized hypothesis; the prefix is target_tokens[0, span.start).
  TokenSeq target_tokens;
  TokenSeq foil_tokens;

  TokenSeq PrefixTokens() const;
  TokenSeq GeneratedTokens() const;
  std::string Key() const { return annotation.Key(); }
  bool correct() const { return generated_gender == annotation.gold_gender; }
};

enum class MatchStatus { kMatched, kNoMatch, kAmbiguous };

struct MatchOutcome {
  MatchStatus status = MatchStatus::kNoMatch;
  std::optional<TermMatch> match;
};

// Whole-word, case-insensitive search for either annotated form. Exactly
// one occurrence of exactly one form yields a match; both forms or repeated
// occurrences are ambiguous. Throws Error(kAlignment) when the tokenizer's
// pieces do not line up with the matched words.
MatchOutcome MatchTerm(const GenderTermAnnotation& annotation,
                       std::string_view hypothesis, const Tokenizer& tokenizer);

// Fraction of matches whose generated gender equals the gold gender.
// Throws Error(kUndefinedResult) on empty input.
double GenderAccuracy(std::span<const TermMatch> matches);

}  // namespace gaudit::corpus
