// src/corpus/matching.cc

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

#include "gaudit/corpus/matching.h"

#include "gaudit/common/error.h"
#include "gaudit/common/text.h"

namespace gaudit::corpus {

TokenSeq TermMatch::PrefixTokens() const {
  return {target_tokens.begin(),
          target_tokens.begin() + static_cast<std::ptrdiff_t>(term_token_span.start)};
}

TokenSeq TermMatch::GeneratedTokens() const {
  return {target_tokens.begin() + static_cast<std::ptrdiff_t>(term_token_span.start),
          target_tokens.begin() + static_cast<std::ptrdiff_t>(term_token_span.end)};
}

MatchOutcome MatchTerm(const GenderTermAnnotation& annotation,
                       std::string_view hypothesis, const Tokenizer& tokenizer) {
  const auto spans = text::SplitWords(hypothesis);
  std::vector<std::string> words;
  words.reserve(spans.size());
  for (const auto& w : spans) {
    words.push_back(text::FoldCase(hypothesis.substr(w.begin, w.end - w.begin)));
  }
  const auto hits_f = text::FindSequence(words, text::FoldedWords(annotation.form_f));
  const auto hits_m = text::FindSequence(words, text::FoldedWords(annotation.form_m));

  MatchOutcome outcome;
  if (hits_f.empty() && hits_m.empty()) return outcome;
  if (hits_f.size() + hits_m.size() > 1) {
    outcome.status = MatchStatus::kAmbiguous;
    return outcome;
  }

  const Gender gender = hits_f.empty() ? Gender::kMasculine : Gender::kFeminine;
  const std::size_t first_word = hits_f.empty() ? hits_m.front() : hits_f.front();
  const std::size_t n_words = text::FoldedWords(annotation.form(gender)).size();
  const std::size_t byte_begin = spans[first_word].begin;
  const std::size_t byte_end = spans[first_word + n_words - 1].end;

  TermMatch m;
  m.annotation = annotation;
  m.hypothesis = std::string(hypothesis);
  m.generated_form = annotation.form(gender);
  m.generated_gender = gender;
  m.foil_form = annotation.form(Other(gender));

  const auto pieces = tokenizer.Tokenize(hypothesis);
  std::optional<std::size_t> start, end;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    m.target_tokens.push_back(p.text);
    if (p.end <= byte_begin || p.begin >= byte_end) continue;
    if (p.begin < byte_begin || p.end > byte_end) {
      throw Error(ErrorCode::kAlignment,
                  "token '" + p.text + "' straddles the boundary of '" + m.generated_form +
                      "' in hypothesis of " + annotation.utterance_id);
    }
    if (!start) start = i;
    end = i + 1;
  }
  if (!start) {
    throw Error(ErrorCode::kAlignment, "tokenizer produced no tokens for '" +
                                           m.generated_form + "' in hypothesis of " +
                                           annotation.utterance_id);
  }
  m.term_token_span = {*start, *end};
  m.foil_tokens = tokenizer.Tokens(m.foil_form);
  if (m.foil_tokens.empty()) {
    throw Error(ErrorCode::kAlignment, "tokenizer produced no tokens for foil '" + m.foil_form + "'");
  }
  outcome.status = MatchStatus::kMatched;
  outcome.match = std::move(m);
  return outcome;
}

double GenderAccuracy(std::span<const TermMatch> matches) {
  if (matches.empty()) {
    throw Error(ErrorCode::kUndefinedResult, "gender accuracy of an empty match set");
  }
  std::size_t correct = 0;
  for (const auto& m : matches) correct += m.correct() ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(matches.size());
}

}  // namespace gaudit::corpus
