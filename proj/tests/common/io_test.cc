// tests/common/io_test.cc

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

#include <atomic>
#include <filesystem>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "gaudit/common/error.h"
#include "gaudit/common/gender.h"
#include "gaudit/common/hash.h"
#include "gaudit/common/io.h"
#include "gaudit/common/parallel.h"
#include "gaudit/common/random.h"

namespace gaudit {
namespace {

TEST(FormatDouble, RoundTrips) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    EXPECT_EQ(std::stod(io::FormatDouble(v)), v);
  }
  EXPECT_EQ(io::FormatDouble(0.5), "0.5");
  EXPECT_EQ(io::FormatDouble(-3.0), "-3");
}

TEST(CsvMatrix, RoundTripsExactly) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  Matrix m(7, 11);
  for (auto& v : m.values()) v = n(rng);
  EXPECT_EQ(io::ParseCsvMatrix(io::FormatCsvMatrix(m)), m);
}

TEST(CsvMatrix, RejectsRaggedRows) {
  EXPECT_THROW(io::ParseCsvMatrix("1,2\n3\n"), Error);
  EXPECT_THROW(io::ParseCsvMatrix("1,x\n"), Error);
}

TEST(ReadFile, MissingFileNamesPath) {
  try {
    io::ReadFile("/nonexistent/dir/file.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/file.tsv"), std::string::npos);
  }
}

TEST(WriteFile, CreatesParents) {
  auto dir = std::filesystem::temp_directory_path() / "gaudit_io_test" / "a" / "b";
  std::filesystem::remove_all(dir.parent_path().parent_path());
  io::WriteFile(dir / "x.txt", "hello");
  EXPECT_EQ(io::ReadFile(dir / "x.txt"), "hello");
}

TEST(Fnv1a64, ReferenceVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(HexDigest(0xabcULL), "0000000000000abc");
}

TEST(SubstreamSeed, DependsOnNameAndSeed) {
  EXPECT_EQ(SubstreamSeed(1, "u1"), SubstreamSeed(1, "u1"));
  EXPECT_NE(SubstreamSeed(1, "u1"), SubstreamSeed(1, "u2"));
  EXPECT_NE(SubstreamSeed(1, "u1"), SubstreamSeed(2, "u1"));
}

TEST(UniformSource, DeterministicUnitInterval) {
  UniformSource a(9), b(9);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double x = a.Next();
    EXPECT_EQ(x, b.Next());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    sum += x;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.02);
  // First draw of mt19937_64 seeded with 9, scaled by 2^-53.
  std::mt19937_64 e(9);
  EXPECT_EQ(UniformSource(9).Next(), static_cast<double>(e() >> 11) * 0x1.0p-53);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(97);
  ParallelFor(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, RethrowsWorkerError) {
  EXPECT_THROW(ParallelFor(10, 3,
                           [](std::size_t i) {
                             if (i == 7) throw Error(ErrorCode::kTransport, "boom");
                           }),
               Error);
}

TEST(Gender, ParseAndPrint) {
  EXPECT_EQ(ParseGender("F"), Gender::kFeminine);
  EXPECT_EQ(ParseGender("M"), Gender::kMasculine);
  EXPECT_FALSE(ParseGender("X").has_value());
  EXPECT_EQ(ToString(Other(Gender::kFeminine)), "M");
}

}  // namespace
}  // namespace gaudit
