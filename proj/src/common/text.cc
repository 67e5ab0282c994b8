// src/common/text.cc

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

#include "gaudit/common/text.h"

#include <algorithm>
#include <cctype>

namespace gaudit::text {

namespace {

bool IsSeparator(unsigned char c) {
  if (c >= 0x80) return false;
  return std::isspace(c) || std::ispunct(c);
}

// Latin-1 supplement letters are encoded as 0xC3 followed by 0x80..0xBF.
// Uppercase U+00C0..U+00DE sit at 0x80..0x9E, lowercase at 0xA0..0xBE;
// U+00D7 and U+00F7 are the multiplication and division signs.
template <bool kToLower>
std::string MapCase(std::string_view s) {
  std::string out(s);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto c = static_cast<unsigned char>(out[i]);
    if (c < 0x80) {
      out[i] = static_cast<char>(kToLower ? std::tolower(c) : std::toupper(c));
    } else if (c == 0xC3 && i + 1 < out.size()) {
      auto n = static_cast<unsigned char>(out[i + 1]);
      if (kToLower && n >= 0x80 && n <= 0x9E && n != 0x97) {
        out[i + 1] = static_cast<char>(n + 0x20);
      } else if (!kToLower && n >= 0xA0 && n <= 0xBE && n != 0xB7) {
        out[i + 1] = static_cast<char>(n - 0x20);
      }
      ++i;
    }
  }
  return out;
}

}  // namespace

std::string FoldCase(std::string_view s) { return MapCase<true>(s); }

std::string UpperCase(std::string_view s) { return MapCase<false>(s); }

std::string NormalizeApostrophes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x80) {
      auto t = static_cast<unsigned char>(s[i + 2]);
      if (t == 0x98 || t == 0x99) {
        out.push_back('\'');
        i += 2;
        continue;
      }
    }
    if (c == 0xCA && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xBC) {
      out.push_back('\'');
      ++i;
      continue;
    }
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<WordSpan> SplitWords(std::string_view s) {
  std::vector<WordSpan> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSeparator(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t begin = i;
    while (i < s.size() && !IsSeparator(static_cast<unsigned char>(s[i]))) ++i;
    words.push_back({begin, i});
  }
  return words;
}

std::vector<std::string> FoldedWords(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& w : SplitWords(s)) {
    out.push_back(FoldCase(s.substr(w.begin, w.end - w.begin)));
  }
  return out;
}

std::vector<std::size_t> FindSequence(const std::vector<std::string>& haystack,
                                      const std::vector<std::string>& needle) {
  std::vector<std::size_t> hits;
  if (needle.empty() || needle.size() > haystack.size()) return hits;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i))) {
      hits.push_back(i);
    }
  }
  return hits;
}

std::string Trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace gaudit::text
