// Copyright 2026 The contractsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP front end for the explorer UI.
//
//   POST /api/runs                      {source, config} -> {run_id}
//   GET  /api/runs/{id}                 full result document
//   GET  /api/runs/{id}/simulations/{k} one simulation with its analytics
//   GET  /healthz                       "ok"
//   GET  /                              static UI bundle, when configured
//
// RunService holds the transport-independent logic so it can be tested
// without sockets; RegisterRoutes wires it into a cpp-httplib server.

#ifndef CONTRACTSIM_SERVICE_H_
#define CONTRACTSIM_SERVICE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "contractsim/config.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace contractsim {

inline constexpr std::size_t kMaxSourceBytes = 256 * 1024;

struct ServiceResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

class RunService {
 public:
  // Documents are persisted as <results_dir>/<run_id>.json when results_dir
  // is non-empty; otherwise kept in memory only.
  explicit RunService(std::filesystem::path results_dir = {});

  ServiceResponse SubmitRun(std::string_view request_body);
  ServiceResponse GetRun(std::string_view run_id);
  ServiceResponse GetSimulation(std::string_view run_id,
                                std::string_view simulation_id);

  // Hex digest of (source, canonical config); identical inputs share an id.
  static std::string RunId(std::string_view source, const FuzzConfig& config);

 private:
  std::optional<std::string> LoadDocument(std::string_view run_id);

  std::filesystem::path results_dir_;
  std::mutex mu_;
  std::map<std::string, std::string, std::less<>> documents_;
};

void RegisterRoutes(httplib::Server& server, RunService& service,
                    const std::optional<std::filesystem::path>& ui_dir);

}  // namespace contractsim

#endif  // CONTRACTSIM_SERVICE_H_
