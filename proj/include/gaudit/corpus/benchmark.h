// include/gaudit/corpus/benchmark.h

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
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaudit/common/gender.h"

namespace gaudit::corpus {

struct Utterance {
  std::string id;
  std::string audio_path;
  std::string src_text;
  Gender speaker_gender = Gender::kMasculine;
  std::string category;
};

// A gendered target term with its two contrastive forms.
struct GenderTermAnnotation {
  std::string utterance_id;
  std::string term_src;
  std::string form_f;
  std::string form_m;
  Gender gold_gender = Gender::kMasculine;

  const std::string& form(Gender g) const {
    return g == Gender::kFeminine ? form_f : form_m;
  }
  // Identifies the term inside an evaluation set.
  std::string Key() const;

  bool operator==(const GenderTermAnnotation&) const = default;
};

struct BenchmarkEntry {
  Utterance utterance;
  std::vector<GenderTermAnnotation> annotations;
};

struct RowError {
  std::size_t line = 0;  // 1-based, header is line 1
  std::string message;
};

struct Benchmark {
  std::vector<BenchmarkEntry> entries;
  std::vector<RowError> errors;
};

inline constexpr std::string_view kBenchmarkHeader =
    "id\taudio_path\tsrc_text\tspeaker_gender\tcategory\tterms";

// Parses the benchmark TSV. Rows that violate the schema are reported in
// Benchmark::errors; a bad header or a repeated id throws.
//
// The terms column holds ';'-separated entries, each either
// form_f:form_m:gold or term_src:form_f:form_m:gold.
Benchmark ParseBenchmark(std::string_view content);
Benchmark LoadBenchmark(const std::filesystem::path& path);

// id -> hypothesis. Lines are "id<TAB>hypothesis"; blank lines are skipped.
std::map<std::string, std::string> ParseHypotheses(std::string_view content);
std::map<std::string, std::string> LoadHypotheses(const std::filesystem::path& path);

// Case-folded (form_f, form_m) pairs.
using ArticleBlocklist = std::set<std::pair<std::string, std::string>>;

// One "form_f/form_m" pair per line; '#' starts a comment.
ArticleBlocklist ParseArticleBlocklist(std::string_view content);
ArticleBlocklist LoadArticleBlocklist(const std::filesystem::path& path);

struct FilterConfig {
  std::set<std::string> category_whitelist = {"1"};
  ArticleBlocklist article_blocklist;
};

// Keeps annotations of whitelisted categories whose form pair is not an
// article. Input order is preserved.
std::vector<GenderTermAnnotation> FilterSpeakerReferential(
    std::span<const BenchmarkEntry> entries, const FilterConfig& config);

}  // namespace gaudit::corpus
