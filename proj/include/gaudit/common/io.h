// include/gaudit/common/io.h

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

#include <filesystem>
#include <string>
#include <string_view>

#include "gaudit/common/matrix.h"

namespace gaudit::io {

// Throws Error(kIo) naming the path when the file cannot be read.
std::string ReadFile(const std::filesystem::path& path);

// Creates parent directories as needed.
void WriteFile(const std::filesystem::path& path, std::string_view content);

// One matrix row per line, comma separated, shortest round-trip formatting.
std::string FormatCsvMatrix(const Matrix& m);
Matrix ParseCsvMatrix(std::string_view content);

// Shortest decimal string that parses back to exactly `v`.
std::string FormatDouble(double v);

}  // namespace gaudit::io
