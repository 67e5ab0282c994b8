// src/metrics/contingency.cc

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

#include "gaudit/metrics/contingency.h"

#include <map>

#include "gaudit/common/error.h"

namespace gaudit::metrics {

std::size_t ContingencyTable::Total() const {
  return cells[0][0] + cells[0][1] + cells[1][0] + cells[1][1];
}

ContingencyResult PrevalenceContingency(std::span<const corpus::TermMatch> matches,
                                        std::span<const PrevalenceRecord> prevalences) {
  std::map<std::string, const PrevalenceRecord*> by_key;
  for (const auto& p : prevalences) by_key[p.term_key] = &p;

  ContingencyResult result;
  result.table.col_labels = {"More Freq.", "Less Freq."};
  for (const auto& m : matches) {
    auto it = by_key.find(m.Key());
    if (it == by_key.end()) {
      throw Error(ErrorCode::kPairing, "no prevalence record for term " + m.Key());
    }
    const auto& rec = *it->second;
    if (!rec.prevalence_1) {
      result.excluded.push_back(m.Key());
      continue;
    }
    // prevalence_1 is relative to the record's form_1; orient it to this
    // match's generated form.
    const double p = rec.generated_gender == m.generated_gender ? *rec.prevalence_1
                                                                : 1.0 - *rec.prevalence_1;
    if (p == 0.5) {
      result.ties.push_back(m.Key());
    } else {
      ++result.table.at(m.generated_gender, p > 0.5 ? 0 : 1);
    }
  }
  return result;
}

ContingencyResult IlmContingency(std::span<const PreferenceRecord> full_records,
                                 std::span<const PreferenceRecord> ilm_records) {
  std::map<std::string, const PreferenceRecord*> ilm_by_key;
  for (const auto& r : ilm_records) {
    if (!ilm_by_key.emplace(r.term_key, &r).second) {
      throw Error(ErrorCode::kPairing, "duplicate ILM record for term " + r.term_key);
    }
  }
  if (full_records.size() != ilm_records.size()) {
    throw Error(ErrorCode::kPairing, std::to_string(full_records.size()) + " full records vs " +
                                         std::to_string(ilm_records.size()) + " ILM records");
  }

  ContingencyResult result;
  result.table.col_labels = {"Higher Prob.", "Lower Prob."};
  for (const auto& full : full_records) {
    auto it = ilm_by_key.find(full.term_key);
    if (it == ilm_by_key.end()) {
      throw Error(ErrorCode::kPairing, "no ILM record for term " + full.term_key);
    }
    const auto& ilm = *it->second;
    if (ilm.generated_gender != full.generated_gender) {
      throw Error(ErrorCode::kPairing, "generated gender differs between modes for " + full.term_key);
    }
    if (ilm.preference_generated == 0.5) {
      result.ties.push_back(full.term_key);
    } else {
      ++result.table.at(full.generated_gender, ilm.preference_generated > 0.5 ? 0 : 1);
    }
  }
  return result;
}

}  // namespace gaudit::metrics
