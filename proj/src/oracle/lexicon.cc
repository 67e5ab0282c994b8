// src/oracle/lexicon.cc

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

#include "gaudit/oracle/lexicon.h"

#include "gaudit/common/text.h"

namespace gaudit::oracle {

GenderLexicon::GenderLexicon(std::span<const corpus::GenderTermAnnotation> annotations,
                             const corpus::Tokenizer& tokenizer) {
  for (const auto& a : annotations) Add(a, tokenizer);
}

void GenderLexicon::Add(const corpus::GenderTermAnnotation& a,
                        const corpus::Tokenizer& tokenizer) {
  const auto f = text::FoldCase(a.form_f);
  const auto m = text::FoldCase(a.form_m);
  Insert(tokenizer.Tokens(f), {Gender::kFeminine, f, m});
  Insert(tokenizer.Tokens(m), {Gender::kMasculine, f, m});
}

std::string GenderLexicon::KeyOf(const corpus::TokenSeq& tokens) {
  std::string key;
  for (const auto& t : tokens) {
    key += text::FoldCase(t);
    key.push_back('\x1f');
  }
  return key;
}

void GenderLexicon::Insert(const corpus::TokenSeq& tokens, LexiconEntry entry) {
  auto [it, inserted] = entries_.emplace(KeyOf(tokens), entry);
  if (!inserted && it->second && it->second->gender != entry.gender) {
    it->second.reset();
  }
}

std::optional<LexiconEntry> GenderLexicon::Lookup(const corpus::TokenSeq& tokens) const {
  auto it = entries_.find(KeyOf(tokens));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace gaudit::oracle
