// tests/corpus/counting_test.cc

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

#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"
#include "gaudit/common/text.h"
#include "gaudit/corpus/counting.h"
#include "support/synth.h"

namespace gaudit::corpus {
namespace {

std::uint64_t CountOf(const std::vector<CorpusCounts>& counts, const std::string& w) {
  for (const auto& c : counts) {
    if (c.word == w) return c.count;
  }
  ADD_FAILURE() << "missing " << w;
  return 0;
}

TEST(CountOccurrences, Basic) {
  auto c = CountOccurrences(std::string_view("a b a"), {"a"});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (CorpusCounts{"a", 2}));
  EXPECT_EQ(CountOf(CountOccurrences(std::string_view("a b a"), {"z"}), "z"), 0u);
}

TEST(CountOccurrences, WholeWordCaseInsensitive) {
  auto c = CountOccurrences(std::string_view("La lavoro, la!\nLA"), {"la", "lavoro", "lav"});
  EXPECT_EQ(CountOf(c, "la"), 3u);
  EXPECT_EQ(CountOf(c, "lavoro"), 1u);
  EXPECT_EQ(CountOf(c, "lav"), 0u);
}

TEST(CountOccurrences, MultiWordTargetsStayWithinLines) {
  auto c = CountOccurrences(std::string_view("sono diventata\nsono\ndiventata sono diventata"),
                            {"sono diventata"});
  EXPECT_EQ(CountOf(c, "sono diventata"), 2u);
}

TEST(CountOccurrences, OutputSortedByWord) {
  auto c = CountOccurrences(std::string_view("x"), {"b", "a", "c"});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].word, "a");
  EXPECT_EQ(c[2].word, "c");
}

TEST(CountOccurrences, UnreadableFile) {
  try {
    CountOccurrences(std::filesystem::path("/no/such/corpus.txt"), {"a"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

// Independent counter: blank out ASCII separators, then split on spaces and
// lowercase ASCII. The fixture has no uppercase non-ASCII letters.
std::map<std::string, std::uint64_t> BruteCount(const std::string& content) {
  std::map<std::string, std::uint64_t> out;
  std::string cleaned = content;
  for (auto& ch : cleaned) {
    auto u = static_cast<unsigned char>(ch);
    if (u < 0x80 && (std::isspace(u) || std::ispunct(u))) ch = ' ';
    else if (u < 0x80) ch = static_cast<char>(std::tolower(u));
  }
  std::istringstream in(cleaned);
  std::string w;
  while (in >> w) ++out[w];
  return out;
}

TEST(CountOccurrences, ThousandLineFixtureMatchesBruteForce) {
  const auto path = testing::FixturePath("corpus_1000.txt");
  const auto content = io::ReadFile(path);
  const auto brute = BruteCount(content);
  std::set<std::string> words;
  for (const auto& [w, n] : brute) words.insert(w);
  words.insert("assente");
  const auto counts = CountOccurrences(std::filesystem::path(path), words);
  ASSERT_EQ(counts.size(), words.size());
  for (const auto& c : counts) {
    auto it = brute.find(c.word);
    EXPECT_EQ(c.count, it == brute.end() ? 0u : it->second) << c.word;
  }
  EXPECT_GT(CountOf(counts, "stanca"), 0u);
}

TEST(CountOccurrences, AdditiveOverConcatenation) {
  const auto lines = text::Split(io::ReadFile(testing::FixturePath("corpus_1000.txt")), '\n');
  const std::set<std::string> words{"la", "il", "diventata", "stanca", "città", "sono diventata"};
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cut = rng() % lines.size();
    std::string a, b, all;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      (i < cut ? a : b) += lines[i] + "\n";
      all += lines[i] + "\n";
    }
    auto ca = CountOccurrences(std::string_view(a), words);
    auto cb = CountOccurrences(std::string_view(b), words);
    auto call = CountOccurrences(std::string_view(all), words);
    for (std::size_t i = 0; i < call.size(); ++i) EXPECT_EQ(call[i].count, ca[i].count + cb[i].count);
  }
}

}  // namespace
}  // namespace gaudit::corpus
