// Copyright 2026 The dialogsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIALOGSUM_REMOTE_HPP_
#define DIALOGSUM_REMOTE_HPP_

#include <atomic>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dialogsum/errors.hpp"
#include "dialogsum/nrp.hpp"

namespace dialogsum {

// The server answered with something outside the wire protocol.
class ProtocolError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

// Connection failure, timeout or server error after all retries.
class TransportError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

class ProbabilityRangeError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

// Message bodies of the scoring protocol. Keys are emitted in sorted order
// with no insignificant whitespace.
std::string encode_score_request(Direction direction, const ScoreRequest& request);
std::string encode_batch_request(Direction direction, std::span<const ScoreRequest> requests);
double decode_score_response(std::string_view body);
std::vector<double> decode_batch_response(std::string_view body, std::size_t expected);

struct RemoteOptions {
  int retries = 2;  // extra attempts after a transport failure or 5xx
  double timeout_seconds = 10.0;
  int max_in_flight = 4;
};

struct HealthInfo {
  std::string status;
  std::string model_id;
};

/// ResponseScorer backed by an HTTP endpoint such as "http://127.0.0.1:8080".
/// Safe to share across threads; concurrent requests are capped at
/// max_in_flight.
class RemoteScorer : public ResponseScorer {
 public:
  RemoteScorer(std::string endpoint, Direction direction, RemoteOptions options = {});
  ~RemoteScorer() override;

  Direction direction() const override { return direction_; }
  double score(const std::vector<std::string>& context,
               const std::string& candidate) const override;
  std::vector<double> score_batch(std::span<const ScoreRequest> requests) const override;
  HealthInfo health() const;

 private:
  struct Impl;
  std::string post(const std::string& path, const std::string& body) const;

  Direction direction_;
  RemoteOptions options_;
  std::unique_ptr<Impl> impl_;
};

/// Deterministic protocol server for client tests and local runs. Every
/// probability comes from `fn`, whatever the requested direction.
class StubServer {
 public:
  explicit StubServer(ProbabilityFn fn, std::string model_id = "stub-overlap");
  ~StubServer();
  StubServer(const StubServer&) = delete;
  StubServer& operator=(const StubServer&) = delete;

  // Binds (port 0 picks a free port), serves on a background thread and
  // returns the bound port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  // Serves on the calling thread until stop() is called elsewhere.
  void run(const std::string& host, int port);
  void stop();
  std::size_t requests_served() const { return served_.load(); }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
  std::atomic<std::size_t> served_{0};
};

}  // namespace dialogsum

#endif  // DIALOGSUM_REMOTE_HPP_
