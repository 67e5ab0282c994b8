// src/corpus/benchmark.cc

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

#include "gaudit/corpus/benchmark.h"

#include <set>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"
#include "gaudit/common/text.h"

namespace gaudit::corpus {

std::string GenderTermAnnotation::Key() const {
  return utterance_id + "|" + form_f + "|" + form_m;
}

namespace {

constexpr std::size_t kColumns = 6;

std::string StripCr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

// Returns an error message, or empty on success.
std::string ParseTerms(const std::string& field, const std::string& utterance_id,
                       std::vector<GenderTermAnnotation>& out) {
  if (text::Trim(field).empty()) return {};
  for (const auto& raw_entry : text::Split(field, ';')) {
    auto entry = text::Trim(raw_entry);
    if (entry.empty()) continue;
    auto parts = text::Split(entry, ':');
    if (parts.size() != 3 && parts.size() != 4) {
      return "term entry '" + entry + "' must be form_f:form_m:gender";
    }
    GenderTermAnnotation a;
    a.utterance_id = utterance_id;
    std::size_t i = 0;
    if (parts.size() == 4) a.term_src = text::Trim(parts[i++]);
    a.form_f = text::Trim(parts[i++]);
    a.form_m = text::Trim(parts[i++]);
    auto gold = ParseGender(text::Trim(parts[i]));
    if (a.form_f.empty() || a.form_m.empty()) {
      return "term entry '" + entry + "' has an empty form";
    }
    if (!gold) return "term entry '" + entry + "' has gender code other than F/M";
    if (text::FoldCase(a.form_f) == text::FoldCase(a.form_m)) {
      return "term entry '" + entry + "' has identical feminine and masculine forms";
    }
    a.gold_gender = *gold;
    out.push_back(std::move(a));
  }
  return {};
}

}  // namespace

Benchmark ParseBenchmark(std::string_view content) {
  auto lines = text::Split(content, '\n');
  if (lines.empty() || StripCr(lines.front()) != kBenchmarkHeader) {
    throw Error(ErrorCode::kMalformedHeader,
                "benchmark header must be: " + std::string(kBenchmarkHeader));
  }
  Benchmark result;
  std::set<std::string> seen;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    auto line = StripCr(lines[n]);
    if (text::Trim(line).empty()) continue;
    auto fail = [&](std::string msg) {
      result.errors.push_back({line_no, "line " + std::to_string(line_no) + ": " + std::move(msg)});
    };
    auto cols = text::Split(line, '\t');
    if (cols.size() != kColumns) {
      fail("expected " + std::to_string(kColumns) + " columns, found " +
           std::to_string(cols.size()));
      continue;
    }
    BenchmarkEntry entry;
    auto& u = entry.utterance;
    u.id = text::Trim(cols[0]);
    u.audio_path = text::Trim(cols[1]);
    u.src_text = cols[2];
    u.category = text::Trim(cols[4]);
    if (u.id.empty()) {
      fail("empty id");
      continue;
    }
    auto gender = ParseGender(text::Trim(cols[3]));
    if (!gender) {
      fail("speaker_gender '" + text::Trim(cols[3]) + "' is not F or M");
      continue;
    }
    u.speaker_gender = *gender;
    if (auto msg = ParseTerms(cols[5], u.id, entry.annotations); !msg.empty()) {
      fail(std::move(msg));
      continue;
    }
    if (!seen.insert(u.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate utterance id '" + u.id + "' on line " + std::to_string(line_no));
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

Benchmark LoadBenchmark(const std::filesystem::path& path) {
  return ParseBenchmark(io::ReadFile(path));
}

std::map<std::string, std::string> ParseHypotheses(std::string_view content) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  for (auto line : text::Split(content, '\n')) {
    ++line_no;
    line = StripCr(std::move(line));
    if (text::Trim(line).empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "hypothesis line " + std::to_string(line_no) + " has no tab separator");
    }
    auto id = text::Trim(std::string_view(line).substr(0, tab));
    if (!out.emplace(id, line.substr(tab + 1)).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate hypothesis id '" + id + "'");
    }
  }
  return out;
}

std::map<std::string, std::string> LoadHypotheses(const std::filesystem::path& path) {
  return ParseHypotheses(io::ReadFile(path));
}

ArticleBlocklist ParseArticleBlocklist(std::string_view content) {
  ArticleBlocklist out;
  std::size_t line_no = 0;
  for (const auto& raw : text::Split(content, '\n')) {
    ++line_no;
    auto line = raw.substr(0, raw.find('#'));
    line = text::Trim(line);
    if (line.empty()) continue;
    auto parts = text::Split(line, '/');
    if (parts.size() != 2 || text::Trim(parts[0]).empty() || text::Trim(parts[1]).empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "article blocklist line " + std::to_string(line_no) + " must be form_f/form_m");
    }
    out.emplace(text::FoldCase(text::Trim(parts[0])), text::FoldCase(text::Trim(parts[1])));
  }
  return out;
}

ArticleBlocklist LoadArticleBlocklist(const std::filesystem::path& path) {
  return ParseArticleBlocklist(io::ReadFile(path));
}

std::vector<GenderTermAnnotation> FilterSpeakerReferential(
    std::span<const BenchmarkEntry> entries, const FilterConfig& config) {
  std::vector<GenderTermAnnotation> kept;
  for (const auto& entry : entries) {
    if (!config.category_whitelist.contains(entry.utterance.category)) continue;
    for (const auto& a : entry.annotations) {
      std::pair key{text::FoldCase(a.form_f), text::FoldCase(a.form_m)};
      if (config.article_blocklist.contains(key)) continue;
      kept.push_back(a);
    }
  }
  return kept;
}

}  // namespace gaudit::corpus
