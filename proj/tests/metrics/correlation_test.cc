// tests/metrics/correlation_test.cc

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

#include <random>

#include <gtest/gtest.h>

#include "gaudit/common/error.h"
#include "gaudit/metrics/correlation.h"
#include "support/brute.h"

namespace gaudit::metrics {
namespace {

TEST(Pearson, PerfectLinearity) {
  std::vector<double> x{1, 2, 3, 4, 5}, y, z;
  for (double v : x) {
    y.push_back(2 * v + 1);
    z.push_back(-v);
  }
  EXPECT_NEAR(Pearson(x, y), 1.0, 1e-15);
  EXPECT_NEAR(Pearson(x, z), -1.0, 1e-15);
}

TEST(Pearson, Errors) {
  std::vector<double> a{1, 2, 3}, b{1, 2}, c{4, 4, 4};
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code([&] { Pearson(a, b); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([&] { Pearson(std::vector<double>{1}, std::vector<double>{2}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([&] { Pearson(a, c); }), ErrorCode::kUndefinedResult);
}

TEST(Pearson, MatchesTwoPassFormula) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 2 + rng() % 60;
    std::vector<double> x(len), y(len);
    const double rho = n(rng);
    for (std::size_t i = 0; i < len; ++i) {
      x[i] = n(rng);
      y[i] = rho * x[i] + n(rng);
    }
    EXPECT_NEAR(Pearson(x, y), brute::Pearson(x, y), 1e-12);
  }
}

TEST(Pearson, AffineInvariance) {
  std::mt19937_64 rng(16);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> scale(0.1, 10.0), off(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(30), y(30), x2(30), y2(30);
    for (int i = 0; i < 30; ++i) {
      x[i] = n(rng);
      y[i] = x[i] + n(rng);
    }
    const double a = scale(rng), b = off(rng), c = scale(rng), d = off(rng);
    for (int i = 0; i < 30; ++i) {
      x2[i] = a * x[i] + b;
      y2[i] = c * y[i] + d;
    }
    EXPECT_NEAR(Pearson(x, y), Pearson(x2, y2), 1e-12);
  }
}

}  // namespace
}  // namespace gaudit::metrics
