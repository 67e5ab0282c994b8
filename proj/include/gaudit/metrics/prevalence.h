// include/gaudit/metrics/prevalence.h

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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaudit/common/gender.h"
#include "gaudit/corpus/counting.h"
#include "gaudit/corpus/matching.h"

namespace gaudit::metrics {

// count_1 / (count_1 + count_2). Throws Error(kUnseenTerm) when both are 0.
double Prevalence(std::uint64_t count_1, std::uint64_t count_2);

// Training-data prevalence of the generated form (form_1) over its foil.
struct PrevalenceRecord {
  std::string term_key;
  Gender generated_gender = Gender::kMasculine;
  std::string form_1;
  std::string form_2;
  std::uint64_t count_1 = 0;
  std::uint64_t count_2 = 0;
  // Absent when neither form occurs in the corpus.
  std::optional<double> prevalence_1;

  // Prevalence of the masculine form, when defined.
  std::optional<double> MasculinePrevalence() const;
};

// Case-folded word -> count lookup built from corpus counts.
using CountTable = std::map<std::string, std::uint64_t>;
CountTable MakeCountTable(std::span<const corpus::CorpusCounts> counts);

// One record per match, in input order. Forms missing from `counts` count
// as zero occurrences.
std::vector<PrevalenceRecord> BuildPrevalenceRecords(std::span<const corpus::TermMatch> matches,
                                                     const CountTable& counts);

}  // namespace gaudit::metrics
