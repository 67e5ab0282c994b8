// src/metrics/prevalence.cc

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

#include "gaudit/metrics/prevalence.h"

#include "gaudit/common/error.h"
#include "gaudit/common/text.h"

namespace gaudit::metrics {

double Prevalence(std::uint64_t count_1, std::uint64_t count_2) {
  if (count_1 == 0 && count_2 == 0) {
    throw Error(ErrorCode::kUnseenTerm, "neither form occurs in the training corpus");
  }
  return static_cast<double>(count_1) / (static_cast<double>(count_1) + static_cast<double>(count_2));
}

std::optional<double> PrevalenceRecord::MasculinePrevalence() const {
  if (!prevalence_1) return std::nullopt;
  return generated_gender == Gender::kMasculine ? *prevalence_1 : 1.0 - *prevalence_1;
}

CountTable MakeCountTable(std::span<const corpus::CorpusCounts> counts) {
  CountTable table;
  for (const auto& c : counts) table[text::FoldCase(c.word)] = c.count;
  return table;
}

std::vector<PrevalenceRecord> BuildPrevalenceRecords(std::span<const corpus::TermMatch> matches,
                                                     const CountTable& counts) {
  auto lookup = [&](const std::string& w) -> std::uint64_t {
    auto it = counts.find(text::FoldCase(w));
    return it == counts.end() ? 0 : it->second;
  };
  std::vector<PrevalenceRecord> out;
  out.reserve(matches.size());
  for (const auto& m : matches) {
    PrevalenceRecord r;
    r.term_key = m.Key();
    r.generated_gender = m.generated_gender;
    r.form_1 = m.generated_form;
    r.form_2 = m.foil_form;
    r.count_1 = lookup(r.form_1);
    r.count_2 = lookup(r.form_2);
    if (r.count_1 + r.count_2 > 0) r.prevalence_1 = Prevalence(r.count_1, r.count_2);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gaudit::metrics
