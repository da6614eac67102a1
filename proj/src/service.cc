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

#include "contractsim/service.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "httplib.h"

#include "contractsim/document.h"
#include "contractsim/fuzz.h"
#include "contractsim/minisol.h"

namespace contractsim {
namespace {

using nlohmann::json;

constexpr std::size_t kRunIdLength = 16;
constexpr std::size_t kMaxRequestBytes = 4 * 1024 * 1024;

ServiceResponse JsonResponse(int status, const json& body) {
  return {status, "application/json", Canonical(body)};
}

ServiceResponse Error(int status, std::string_view code,
                      const std::string& message) {
  return JsonResponse(status, {{"error", std::string(code)}, {"message", message}});
}

bool IsRunId(std::string_view id) {
  return id.size() == kRunIdLength &&
         std::all_of(id.begin(), id.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

}  // namespace

RunService::RunService(std::filesystem::path results_dir)
    : results_dir_(std::move(results_dir)) {
  if (!results_dir_.empty()) std::filesystem::create_directories(results_dir_);
}

std::string RunService::RunId(std::string_view source,
                              const FuzzConfig& config) {
  std::string keyed(source);
  keyed.push_back('\0');
  keyed += Canonical(ConfigToJson(config));
  return Sha256Hex(keyed).substr(0, kRunIdLength);
}

ServiceResponse RunService::SubmitRun(std::string_view request_body) {
  json request;
  try {
    request = json::parse(request_body);
  } catch (const json::exception& e) {
    return Error(400, "bad_request", std::string("invalid JSON: ") + e.what());
  }
  if (!request.is_object() || !request.contains("source") ||
      !request["source"].is_string()) {
    return Error(400, "bad_request", "body must be {\"source\": string, \"config\": object}");
  }
  const std::string source = request["source"].get<std::string>();
  if (source.size() > kMaxSourceBytes) {
    return Error(413, "payload_too_large", "source exceeds 256 KiB");
  }

  FuzzConfig config;
  try {
    if (request.contains("config")) config = ConfigFromJson(request["config"]);
    ValidateConfig(config);
  } catch (const ConfigError& e) {
    return Error(400, "config_error", e.what());
  }

  ContractModel model;
  try {
    model = Parse(source);
  } catch (const ParseError& e) {
    return JsonResponse(400, {{"error", "parse_error"},
                              {"message", e.message()},
                              {"line", e.location().line},
                              {"column", e.location().column}});
  }

  std::string run_id = RunId(source, config);
  if (LoadDocument(run_id)) return JsonResponse(200, {{"run_id", run_id}});

  std::string document;
  try {
    document = ExportDocument(model, source, config, Fuzz(model, config));
  } catch (const ModelError& e) {
    return Error(400, "model_error", e.what());
  }

  std::lock_guard<std::mutex> lock(mu_);
  if (!results_dir_.empty()) {
    std::ofstream out(results_dir_ / (run_id + ".json"), std::ios::binary);
    out << document;
    if (!out) return Error(500, "io_error", "cannot persist result document");
  }
  documents_.emplace(run_id, std::move(document));
  return JsonResponse(200, {{"run_id", run_id}});
}

std::optional<std::string> RunService::LoadDocument(std::string_view run_id) {
  if (!IsRunId(run_id)) return std::nullopt;
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = documents_.find(run_id); it != documents_.end()) {
    return it->second;
  }
  if (results_dir_.empty()) return std::nullopt;
  std::ifstream in(results_dir_ / (std::string(run_id) + ".json"),
                   std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  documents_.emplace(std::string(run_id), buffer.str());
  return buffer.str();
}

ServiceResponse RunService::GetRun(std::string_view run_id) {
  auto document = LoadDocument(run_id);
  if (!document) return Error(404, "not_found", "unknown run id");
  return {200, "application/json", *document};
}

ServiceResponse RunService::GetSimulation(std::string_view run_id,
                                          std::string_view simulation_id) {
  auto text = LoadDocument(run_id);
  if (!text) return Error(404, "not_found", "unknown run id");
  auto k = ParseUint(simulation_id);
  ResultDocument document;
  try {
    document = ParseDocument(*text);
  } catch (const DocumentError& e) {
    return Error(500, "corrupt_document", e.what());
  }
  if (!k || *k >= document.simulations.size()) {
    return Error(404, "not_found", "unknown simulation");
  }
  return {200, "application/json",
          SerializeSimulation(document.simulations[static_cast<std::size_t>(*k)])};
}

namespace {

void Reply(httplib::Response& res, const ServiceResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

constexpr std::string_view kPlaceholderPage =
    "<!doctype html><title>contractsim</title>"
    "<p>The explorer UI bundle is not installed. Start the server with "
    "--ui-dir pointing at the built bundle, or use the JSON API under "
    "/api/runs.</p>\n";

}  // namespace

void RegisterRoutes(httplib::Server& server, RunService& service,
                    const std::optional<std::filesystem::path>& ui_dir) {
  server.set_payload_max_length(kMaxRequestBytes);

  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });
  server.Post("/api/runs", [&service](const httplib::Request& req,
                                      httplib::Response& res) {
    Reply(res, service.SubmitRun(req.body));
  });
  server.Get(R"(/api/runs/([0-9A-Za-z]+))",
             [&service](const httplib::Request& req, httplib::Response& res) {
               Reply(res, service.GetRun(req.matches[1].str()));
             });
  server.Get(R"(/api/runs/([0-9A-Za-z]+)/simulations/([0-9A-Za-z]+))",
             [&service](const httplib::Request& req, httplib::Response& res) {
               Reply(res, service.GetSimulation(req.matches[1].str(),
                                                req.matches[2].str()));
             });

  if (ui_dir && std::filesystem::is_directory(*ui_dir)) {
    server.set_mount_point("/", ui_dir->string());
  } else {
    server.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(std::string(kPlaceholderPage), "text/html");
    });
  }
}

}  // namespace contractsim
