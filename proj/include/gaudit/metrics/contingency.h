// include/gaudit/metrics/contingency.h

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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gaudit/common/gender.h"
#include "gaudit/corpus/matching.h"
#include "gaudit/metrics/preference.h"
#include "gaudit/metrics/prevalence.h"

namespace gaudit::metrics {

// Rows are generated gender (F, M); columns are a binary outcome whose first
// label is the "agreeing" side (More Freq. / Higher Prob.).
struct ContingencyTable {
  std::array<std::string, 2> row_labels{"F", "M"};
  std::array<std::string, 2> col_labels;
  std::array<std::array<std::size_t, 2>, 2> cells{};

  std::size_t& at(Gender row, std::size_t col) {
    return cells[row == Gender::kFeminine ? 0 : 1][col];
  }
  std::size_t at(Gender row, std::size_t col) const {
    return cells[row == Gender::kFeminine ? 0 : 1][col];
  }
  std::size_t Total() const;
};

struct ContingencyResult {
  ContingencyTable table;
  std::vector<std::string> ties;      // keys at exactly 0.5
  std::vector<std::string> excluded;  // keys with undefined statistic
};

// Classifies each match by whether its generated form is the more prevalent
// one (> 0.5) in the training data. Records are paired to matches by term
// key; a match without a record raises Error(kPairing).
ContingencyResult PrevalenceContingency(std::span<const corpus::TermMatch> matches,
                                        std::span<const PrevalenceRecord> prevalences);

// Classifies each term by whether the ILM gives the generated form higher
// (> 0.5) or lower (< 0.5) preference. Full and ILM records must pair up
// one-to-one by term key, otherwise Error(kPairing).
ContingencyResult IlmContingency(std::span<const PreferenceRecord> full_records,
                                 std::span<const PreferenceRecord> ilm_records);

}  // namespace gaudit::metrics
