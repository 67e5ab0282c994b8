// include/gaudit/common/hash.h

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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace gaudit {

// 64-bit FNV-1a. Stable across platforms and runs.
std::uint64_t Fnv1a64(std::string_view bytes,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of the named random substream derived from a run seed.
std::uint64_t SubstreamSeed(std::uint64_t run_seed, std::string_view name);

std::string HexDigest(std::uint64_t h);

// FNV-1a digest of a file's bytes, hex encoded.
std::string HashFile(const std::filesystem::path& path);

}  // namespace gaudit
