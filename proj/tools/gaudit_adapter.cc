// tools/gaudit_adapter.cc

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

// Serves the synthetic or prior oracle over the NDJSON adapter protocol on
// stdin/stdout. Useful for exercising `--oracle adapter:<command>` end to end
// and as a template for wrapping a real model.
//
//   gaudit_adapter --config run.json [--reverse] [--max-in-flight 8]

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaudit/cli/commands.h"
#include "gaudit/cli/run_config.h"
#include "gaudit/common/error.h"
#include "gaudit/corpus/benchmark.h"
#include "gaudit/oracle/wire.h"

int main(int argc, char** argv) {
  CLI::App app{"Oracle adapter over stdin/stdout"};
  std::string config_path;
  std::string benchmark;
  std::string oracle = "synthetic";
  gaudit::oracle::ServeOptions serve;
  app.add_option("--config", config_path, "RunConfig JSON with the oracle settings");
  app.add_option("--benchmark", benchmark, "Benchmark TSV supplying the gendered forms");
  app.add_option("--oracle", oracle, "synthetic or prior");
  app.add_option("--max-in-flight", serve.max_in_flight, "Requests answered per flush");
  app.add_flag("--reverse", serve.reverse_order, "Answer each group in reverse order");
  CLI11_PARSE(app, argc, argv);

  try {
    gaudit::cli::RunConfig config;
    if (!config_path.empty()) config = gaudit::cli::LoadRunConfig(config_path);
    if (!benchmark.empty()) config.paths.benchmark = benchmark;
    if (config.oracle.kind == gaudit::cli::OracleKind::kAdapter || !app.get_option("--oracle")->empty()) {
      gaudit::cli::ApplyOracleFlag(config.oracle, oracle);
    }
    if (config.oracle.kind == gaudit::cli::OracleKind::kAdapter) {
      throw gaudit::Error(gaudit::ErrorCode::kInvalidArgument, "the adapter cannot wrap another adapter");
    }
    if (config.paths.benchmark.empty()) {
      throw gaudit::Error(gaudit::ErrorCode::kInvalidArgument, "a benchmark is required");
    }
    const auto bench = gaudit::corpus::LoadBenchmark(config.paths.benchmark);
    gaudit::corpus::FilterConfig filter;
    filter.category_whitelist = config.categories;
    const auto annotations = gaudit::corpus::FilterSpeakerReferential(bench.entries, filter);
    auto model = gaudit::cli::MakeOracle(config.oracle, annotations);
    gaudit::oracle::ServeOracle(*model, std::cin, std::cout, serve);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
