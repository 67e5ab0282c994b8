// include/gaudit/oracle/lexicon.h

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

#include <map>
#include <optional>
#include <span>
#include <string>

#include "gaudit/common/gender.h"
#include "gaudit/corpus/benchmark.h"
#include "gaudit/corpus/tokenizer.h"

namespace gaudit::oracle {

struct LexiconEntry {
  Gender gender = Gender::kMasculine;
  std::string form_f;
  std::string form_m;
};

// Maps tokenized gendered forms back to their gender and contrastive pair.
// Built from benchmark annotations; forms are case-folded before
// tokenization.
class GenderLexicon {
 public:
  GenderLexicon() = default;
  GenderLexicon(std::span<const corpus::GenderTermAnnotation> annotations,
                const corpus::Tokenizer& tokenizer);

  void Add(const corpus::GenderTermAnnotation& annotation, const corpus::Tokenizer& tokenizer);

  // nullopt for unknown sequences and for sequences registered with both
  // genders.
  std::optional<LexiconEntry> Lookup(const corpus::TokenSeq& tokens) const;

  std::size_t size() const { return entries_.size(); }

 private:
  static std::string KeyOf(const corpus::TokenSeq& tokens);
  void Insert(const corpus::TokenSeq& tokens, LexiconEntry entry);

  std::map<std::string, std::optional<LexiconEntry>> entries_;
};

}  // namespace gaudit::oracle
