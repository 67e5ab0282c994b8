// include/gaudit/common/gender.h

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
#include <string_view>

namespace gaudit {

enum class Gender { kFeminine, kMasculine };

inline constexpr std::string_view ToString(Gender g) {
  return g == Gender::kFeminine ? "F" : "M";
}

inline constexpr Gender Other(Gender g) {
  return g == Gender::kFeminine ? Gender::kMasculine : Gender::kFeminine;
}

// Accepts exactly "F" or "M".
inline std::optional<Gender> ParseGender(std::string_view code) {
  if (code == "F") return Gender::kFeminine;
  if (code == "M") return Gender::kMasculine;
  return std::nullopt;
}

}  // namespace gaudit
