// include/gaudit/metrics/preference.h

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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaudit/common/gender.h"
#include "gaudit/corpus/matching.h"
#include "gaudit/oracle/oracle.h"

namespace gaudit::metrics {

// Pairwise softmax 1 / (1 + exp(logp_2 - logp_1)), stable for any finite
// inputs. Throws Error(kContractViolation) on non-finite input.
double Preference(double logp_1, double logp_2);

struct PreferenceRecord {
  std::string term_key;
  Gender generated_gender = Gender::kMasculine;
  double logp_generated = 0.0;
  double logp_foil = 0.0;
  double preference_generated = 0.5;
  double masculine_preference = 0.5;
  oracle::ScoreMode mode = oracle::ScoreMode::kFull;
};

// `response` scores [generated, foil], as built by MakeScoreRequest.
PreferenceRecord MakePreferenceRecord(const corpus::TermMatch& match,
                                      const oracle::OracleResponse& response,
                                      oracle::ScoreMode mode);

enum class GroupBy { kAll, kGeneratedGender };

struct GroupMean {
  std::string group;  // "ALL", "F" or "M"
  std::size_t n = 0;
  double mean = 0.0;
  // Population standard deviation.
  double stddev = 0.0;
};

struct PreferenceSummary {
  std::vector<GroupMean> groups;
  std::vector<std::string> warnings;
};

// Mean masculine preference overall or per generated gender. Empty gender
// groups are omitted with a warning. Throws Error(kUndefinedResult) on empty
// input.
PreferenceSummary MasculinePreferenceSummary(std::span<const PreferenceRecord> records,
                                             GroupBy group_by);

}  // namespace gaudit::metrics
