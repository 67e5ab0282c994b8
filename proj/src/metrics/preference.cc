// src/metrics/preference.cc

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

#include "gaudit/metrics/preference.h"

#include <cmath>

#include "gaudit/common/error.h"

namespace gaudit::metrics {

double Preference(double logp_1, double logp_2) {
  if (!std::isfinite(logp_1) || !std::isfinite(logp_2)) {
    throw Error(ErrorCode::kContractViolation, "preference of non-finite log-probability");
  }
  const double d = logp_2 - logp_1;
  if (d > 0.0) {
    const double e = std::exp(-d);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(d));
}

PreferenceRecord MakePreferenceRecord(const corpus::TermMatch& match,
                                      const oracle::OracleResponse& response,
                                      oracle::ScoreMode mode) {
  PreferenceRecord r;
  r.term_key = match.Key();
  r.generated_gender = match.generated_gender;
  r.mode = mode;
  r.logp_generated = oracle::WordLogprob(response, 0);
  r.logp_foil = oracle::WordLogprob(response, 1);
  r.preference_generated = Preference(r.logp_generated, r.logp_foil);
  r.masculine_preference = match.generated_gender == Gender::kMasculine
                               ? r.preference_generated
                               : Preference(r.logp_foil, r.logp_generated);
  return r;
}

namespace {

GroupMean Summarize(std::string group, std::span<const double> values) {
  GroupMean g;
  g.group = std::move(group);
  g.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  g.mean = sum / static_cast<double>(g.n);
  double ss = 0.0;
  for (double v : values) ss += (v - g.mean) * (v - g.mean);
  g.stddev = std::sqrt(ss / static_cast<double>(g.n));
  return g;
}

}  // namespace

PreferenceSummary MasculinePreferenceSummary(std::span<const PreferenceRecord> records,
                                             GroupBy group_by) {
  if (records.empty()) {
    throw Error(ErrorCode::kUndefinedResult, "masculine preference summary of no records");
  }
  PreferenceSummary s;
  if (group_by == GroupBy::kAll) {
    std::vector<double> all;
    for (const auto& r : records) all.push_back(r.masculine_preference);
    s.groups.push_back(Summarize("ALL", all));
    return s;
  }
  for (Gender g : {Gender::kFeminine, Gender::kMasculine}) {
    std::vector<double> values;
    for (const auto& r : records) {
      if (r.generated_gender == g) values.push_back(r.masculine_preference);
    }
    if (values.empty()) {
      s.warnings.push_back("no records with generated gender " + std::string(ToString(g)));
      continue;
    }
    s.groups.push_back(Summarize(std::string(ToString(g)), values));
  }
  return s;
}

}  // namespace gaudit::metrics
