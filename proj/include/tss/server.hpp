// Copyright 2026 The tss Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

namespace tss {

struct ServerOptions {
  std::filesystem::path data_dir;
  std::string host = "127.0.0.1";
  int port = 8787;                       // 0 picks a free port
  std::size_t jobs = 1;                  // worker threads per sweep
  std::size_t sample_size = 100;
  double sync_wait_seconds = 2.0;        // longer sweeps answer with a job id
  std::filesystem::path static_dir;      // optional explorer bundle served at /
};

/// JSON HTTP facade over the library. Routes:
///   GET  /api/datasets
///   POST /api/simplify          {dataset, instance_id, algorithm, alpha_c[, split]}
///   POST /api/resolve-loyalty   {dataset, algorithm, classifier, loyalty_target, seed}
///   GET  /api/curve?dataset=&algorithm=&classifier=&seed=
///   GET  /api/jobs/<id>
///   GET  /api/prototypes?dataset=&k=&algorithm=&alpha_c=[&metric=&seed=]
class Server {
 public:
  explicit Server(ServerOptions opts);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket and returns the bound port.
  int bind();
  /// Serves until stop(); call after bind().
  void listen();
  void stop();

  /// Number of sweeps actually computed (not served from cache).
  std::size_t sweeps_computed() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tss
