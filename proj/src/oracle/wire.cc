// src/oracle/wire.cc

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

#include "gaudit/oracle/wire.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <map>
#include <mutex>
#include <set>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"

namespace gaudit::oracle {

using nlohmann::json;

namespace wire {

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kTransport, "malformed protocol message: " + what);
}

}  // namespace

json EncodeFeatures(const AcousticFeatures& features) {
  json rows = json::array();
  for (std::size_t b = 0; b < features.n_bins(); ++b) {
    auto r = features.matrix.row(b);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return {{"frame_hop_s", features.frame_hop_s},
          {"bin_centers_hz", features.bin_centers_hz},
          {"matrix", std::move(rows)}};
}

AcousticFeatures DecodeFeatures(const json& j) {
  try {
    AcousticFeatures f;
    f.frame_hop_s = j.at("frame_hop_s").get<double>();
    f.bin_centers_hz = j.at("bin_centers_hz").get<std::vector<double>>();
    const auto& rows = j.at("matrix");
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows ? rows.at(0).size() : 0;
    f.matrix = Matrix(n_rows, n_cols);
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (rows.at(r).size() != n_cols) Malformed("ragged feature matrix");
      for (std::size_t c = 0; c < n_cols; ++c) f.matrix(r, c) = rows[r][c].get<double>();
    }
    return f;
  } catch (const json::exception& e) {
    Malformed(e.what());
  }
}

json EncodeScoreRequest(const ScoreRequest& request, ScoreMode mode) {
  return {{"op", "score"},
          {"id", request.id},
          {"mode", ToString(mode)},
          {"prefix_tokens", request.prefix_tokens},
          {"candidates", request.candidates},
          {"features", EncodeFeatures(request.features)}};
}

std::pair<ScoreRequest, ScoreMode> DecodeScoreRequest(const json& j) {
  try {
    ScoreRequest r;
    r.id = j.at("id").get<std::string>();
    const auto mode = ParseScoreMode(j.value("mode", std::string("full")));
    r.prefix_tokens = j.value("prefix_tokens", corpus::TokenSeq{});
    r.candidates = j.at("candidates").get<std::vector<corpus::TokenSeq>>();
    if (j.contains("features")) {
      r.features = DecodeFeatures(j.at("features"));
    } else if (j.contains("features_path")) {
      r.features.matrix = io::ParseCsvMatrix(io::ReadFile(j.at("features_path").get<std::string>()));
      r.features.frame_hop_s = j.value("frame_hop_s", 0.01);
      r.features.bin_centers_hz = j.contains("bin_centers_hz")
                                      ? j.at("bin_centers_hz").get<std::vector<double>>()
                                      : MelBinCenters({.n_bins = r.features.matrix.rows()});
    } else {
      Malformed("score request without features or features_path");
    }
    return {std::move(r), mode};
  } catch (const json::exception& e) {
    Malformed(e.what());
  }
}

json EncodeResponse(const OracleResponse& response) {
  return {{"id", response.id}, {"candidate_logprobs", response.candidate_logprobs}};
}

OracleResponse DecodeResponse(const json& j) {
  try {
    OracleResponse r;
    r.id = j.at("id").get<std::string>();
    if (j.contains("error")) {
      throw Error(ErrorCode::kTransport,
                  "adapter error for request " + r.id + ": " + j.at("error").get<std::string>());
    }
    r.candidate_logprobs = j.at("candidate_logprobs").get<std::vector<double>>();
    return r;
  } catch (const json::exception& e) {
    Malformed(e.what());
  }
}

}  // namespace wire

void ServeOracle(Oracle& oracle, std::istream& in, std::ostream& out,
                 const ServeOptions& options) {
  std::vector<json> pending;
  auto reply = [&](const json& j) { out << j.dump() << '\n'; };
  auto drain = [&] {
    std::vector<json> answers;
    for (const auto& req : pending) {
      const std::string id = req.value("id", std::string());
      try {
        auto [request, mode] = wire::DecodeScoreRequest(req);
        answers.push_back(wire::EncodeResponse(oracle.Score(request, mode)));
      } catch (const std::exception& e) {
        answers.push_back({{"id", id}, {"error", e.what()}});
      }
    }
    if (options.reverse_order) std::reverse(answers.begin(), answers.end());
    for (const auto& a : answers) reply(a);
    pending.clear();
    out.flush();
  };

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json msg;
    try {
      msg = json::parse(line);
    } catch (const json::exception& e) {
      reply({{"id", ""}, {"error", std::string("unparseable request: ") + e.what()}});
      out.flush();
      continue;
    }
    const std::string op = msg.value("op", std::string("score"));
    if (op == "hello") {
      reply({{"id", msg.value("id", std::string())}, {"max_in_flight", options.max_in_flight}});
      out.flush();
    } else if (op == "tokenize") {
      json tokens = json::array();
      for (const auto& p : oracle.tokenizer().Tokenize(msg.value("text", std::string()))) {
        tokens.push_back({{"text", p.text}, {"begin", p.begin}, {"end", p.end}});
      }
      reply({{"id", msg.value("id", std::string())}, {"tokens", std::move(tokens)}});
      out.flush();
    } else if (op == "flush") {
      drain();
    } else if (op == "score") {
      pending.push_back(std::move(msg));
      if (pending.size() >= std::max<std::size_t>(1, options.max_in_flight)) drain();
    } else {
      reply({{"id", msg.value("id", std::string())}, {"error", "unknown op '" + op + "'"}});
      out.flush();
    }
  }
  drain();
}

// Bidirectional pipe to a child process.
class ProcessOracle::Channel {
 public:
  explicit Channel(const std::string& command) {
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) {
      throw Error(ErrorCode::kTransport, std::string("pipe failed: ") + std::strerror(errno));
    }
    pid_ = fork();
    if (pid_ < 0) throw Error(ErrorCode::kTransport, "fork failed");
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    // Writing to an adapter that died must surface as an error, not SIGPIPE.
    signal(SIGPIPE, SIG_IGN);
    write_ = fdopen(to_child[1], "w");
    read_ = fdopen(from_child[0], "r");
    if (!write_ || !read_) throw Error(ErrorCode::kTransport, "fdopen failed");
  }

  ~Channel() {
    if (write_) std::fclose(write_);
    if (read_) std::fclose(read_);
    if (pid_ > 0) {
      int status = 0;
      waitpid(pid_, &status, 0);
    }
  }

  void Send(const json& j) {
    const std::string line = j.dump() + "\n";
    if (std::fwrite(line.data(), 1, line.size(), write_) != line.size()) {
      throw Error(ErrorCode::kTransport, "adapter closed its input");
    }
  }

  void Flush() {
    if (std::fflush(write_) != 0) throw Error(ErrorCode::kTransport, "adapter closed its input");
  }

  json Receive() {
    std::string line;
    int c;
    while ((c = std::fgetc(read_)) != EOF && c != '\n') line.push_back(static_cast<char>(c));
    if (c == EOF && line.empty()) {
      throw Error(ErrorCode::kTransport, "adapter exited before replying");
    }
    try {
      return json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kTransport, std::string("unparseable adapter reply: ") + e.what());
    }
  }

  json Call(const json& request) {
    std::lock_guard lock(mu_);
    Send(request);
    Flush();
    return Receive();
  }

  std::mutex& mutex() { return mu_; }

 private:
  pid_t pid_ = -1;
  FILE* write_ = nullptr;
  FILE* read_ = nullptr;
  std::mutex mu_;
};

class ProcessOracle::RemoteTokenizer final : public corpus::Tokenizer {
 public:
  explicit RemoteTokenizer(Channel& channel) : channel_(channel) {}

  std::vector<corpus::TokenPiece> Tokenize(std::string_view text) const override {
    std::lock_guard lock(cache_mu_);
    std::string key(text);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto reply = channel_.Call({{"op", "tokenize"}, {"id", "tok"}, {"text", key}});
    if (reply.contains("error")) {
      throw Error(ErrorCode::kTransport, "adapter tokenizer error: " + reply["error"].dump());
    }
    std::vector<corpus::TokenPiece> pieces;
    try {
      for (const auto& t : reply.at("tokens")) {
        pieces.push_back({t.at("text").get<std::string>(), t.at("begin").get<std::size_t>(),
                          t.at("end").get<std::size_t>()});
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kTransport, std::string("malformed tokenize reply: ") + e.what());
    }
    cache_.emplace(std::move(key), pieces);
    return pieces;
  }

 private:
  Channel& channel_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::string, std::vector<corpus::TokenPiece>> cache_;
};

ProcessOracle::ProcessOracle(const std::string& command)
    : channel_(std::make_unique<Channel>(command)),
      tokenizer_(std::make_unique<RemoteTokenizer>(*channel_)) {
  auto hello = channel_->Call({{"op", "hello"}, {"id", "hello"}});
  max_in_flight_ = std::max<std::size_t>(1, hello.value("max_in_flight", std::size_t{1}));
}

ProcessOracle::~ProcessOracle() = default;

const corpus::Tokenizer& ProcessOracle::tokenizer() const { return *tokenizer_; }

OracleResponse ProcessOracle::DoScore(const ScoreRequest& request, ScoreMode mode) {
  return std::move(DoScoreBatch({&request, 1}, mode).front());
}

std::vector<OracleResponse> ProcessOracle::DoScoreBatch(std::span<const ScoreRequest> requests,
                                                        ScoreMode mode) {
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (!slot.emplace(requests[i].id, i).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate request id '" + requests[i].id + "'");
    }
  }
  std::lock_guard lock(channel_->mutex());
  for (const auto& r : requests) channel_->Send(wire::EncodeScoreRequest(r, mode));
  channel_->Send({{"op", "flush"}});
  channel_->Flush();

  // Read every reply before decoding so an error reply cannot leave the
  // stream out of sync.
  std::vector<json> replies(requests.size());
  std::set<std::string> answered;
  for (std::size_t n = 0; n < requests.size(); ++n) {
    auto reply = channel_->Receive();
    auto id = reply.value("id", std::string());
    auto it = slot.find(id);
    if (it == slot.end() || !answered.insert(id).second) {
      throw Error(ErrorCode::kTransport, "adapter replied with unexpected id '" + id + "'");
    }
    replies[it->second] = std::move(reply);
  }
  std::vector<OracleResponse> out;
  out.reserve(replies.size());
  for (const auto& reply : replies) out.push_back(wire::DecodeResponse(reply));
  return out;
}

}  // namespace gaudit::oracle
