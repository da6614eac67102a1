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

#include "contractsim/cli.h"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"

#include "contractsim/document.h"
#include "contractsim/fuzz.h"
#include "contractsim/minisol.h"
#include "contractsim/service.h"
#include "contractsim/vm.h"

namespace contractsim {
namespace {

constexpr int kDefaultPort = 8080;

struct IoError {
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw IoError{"cannot write '" + path + "'"};
}

// Flags shared by fuzz and replay. Values stay strings until applied so
// 128-bit quantities survive and unset flags can be told apart.
struct ConfigFlags {
  CLI::Option* users = nullptr;
  CLI::Option* owner = nullptr;
  CLI::Option* endowment = nullptr;
  CLI::Option* iterations = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* max_sims = nullptr;
  CLI::Option* max_len = nullptr;
  CLI::Option* max_value = nullptr;

  int users_value = 0;
  int owner_value = 0;
  std::string endowment_value;
  int iterations_value = 0;
  std::string seed_value;
  int max_sims_value = 0;
  int max_len_value = 0;
  std::string max_value_value;

  void Add(CLI::App* app) {
    users = app->add_option("--users", users_value, "number of simulated users");
    owner = app->add_option("--owner", owner_value, "index of the contract owner");
    endowment = app->add_option("--endowment", endowment_value,
                                "starting balance of every user");
    iterations = app->add_option("--iterations", iterations_value,
                                 "fuzzing iteration budget");
    seed = app->add_option("--seed", seed_value, "random seed");
    max_sims = app->add_option("--max-sims", max_sims_value,
                               "maximum simulations to report");
    max_len = app->add_option("--max-len", max_len_value,
                              "maximum call-sequence length");
    max_value = app->add_option("--max-value", max_value_value,
                                "maximum value sent with a call");
  }

  static Uint ParseQuantity(const std::string& text, const char* flag) {
    auto v = ParseUint(text);
    if (!v) throw ConfigError(std::string(flag) + " must be a non-negative integer");
    return *v;
  }

  void ApplyTo(FuzzConfig& config) const {
    if (users->count()) config.num_users = users_value;
    if (owner->count()) config.owner_index = owner_value;
    if (endowment->count()) {
      config.endowment = ParseQuantity(endowment_value, "--endowment");
    }
    if (iterations->count()) config.iteration_budget = iterations_value;
    if (seed->count()) {
      Uint s = ParseQuantity(seed_value, "--seed");
      if (s > ~std::uint64_t{0}) throw ConfigError("--seed exceeds 64 bits");
      config.rng_seed = static_cast<std::uint64_t>(s);
    }
    if (max_sims->count()) config.max_simulations = max_sims_value;
    if (max_len->count()) config.max_sequence_length = max_len_value;
    if (max_value->count()) {
      config.max_value_per_call = ParseQuantity(max_value_value, "--max-value");
    }
  }
};

ContractModel LoadContract(const std::string& path, std::string& source) {
  source = ReadFile(path);
  return Parse(source);
}

int Serve(int port, const std::string& results_dir,
          const std::string& ui_dir, std::ostream& out, std::ostream& err) {
  RunService service(results_dir);
  httplib::Server server;
  std::optional<std::filesystem::path> ui;
  if (!ui_dir.empty()) ui = ui_dir;
  RegisterRoutes(server, service, ui);
  out << "serving on http://0.0.0.0:" << port << std::endl;
  if (!server.listen("0.0.0.0", port)) {
    err << "error: cannot listen on port " << port << "\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Simulate multi-user call sequences against MiniSol contracts."};
  app.require_subcommand(1);

  std::string contract_path;
  std::string output_path;

  CLI::App* fuzz = app.add_subcommand("fuzz", "fuzz a contract and export simulations");
  fuzz->add_option("contract", contract_path, "MiniSol source (.msol)")->required();
  fuzz->add_option("-o,--output", output_path, "write the result document here");
  std::string seeds_path;
  fuzz->add_option("--seeds", seeds_path, "initial seed sequences (JSON)");
  ConfigFlags fuzz_flags;
  fuzz_flags.Add(fuzz);

  CLI::App* replay = app.add_subcommand("replay", "replay one call sequence");
  replay->add_option("contract", contract_path, "MiniSol source (.msol)")->required();
  std::string sequence_path;
  replay->add_option("--sequence", sequence_path, "call sequence (JSON)")->required();
  replay->add_option("-o,--output", output_path, "write the result document here");
  ConfigFlags replay_flags;
  replay_flags.Add(replay);

  CLI::App* serve = app.add_subcommand("serve", "serve the JSON API and UI");
  int port = kDefaultPort;
  if (const char* env = std::getenv("PORT")) {
    if (auto p = ParseUint(env); p && *p <= 65535) port = static_cast<int>(*p);
  }
  std::string results_dir = "results";
  std::string ui_dir;
  serve->add_option("--port", port, "listen port (default $PORT or 8080)");
  serve->add_option("--results-dir", results_dir, "result document directory");
  serve->add_option("--ui-dir", ui_dir, "built explorer UI bundle");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  std::string source;
  try {
    if (fuzz->parsed()) {
      ContractModel model = LoadContract(contract_path, source);
      FuzzConfig config;
      fuzz_flags.ApplyTo(config);
      ValidateConfig(config);
      std::vector<CallSequence> seeds;
      if (!seeds_path.empty()) {
        seeds = ParseCallSequences(ReadFile(seeds_path)).sequences;
      }
      FuzzResult result = Fuzz(model, config, seeds);
      Emit(ExportDocument(model, source, config, result), output_path, out);
      return kExitOk;
    }
    if (replay->parsed()) {
      ContractModel model = LoadContract(contract_path, source);
      CallSequenceFile file = ParseCallSequences(ReadFile(sequence_path));
      if (file.sequences.size() != 1) {
        throw DocumentError("replay expects exactly one call sequence");
      }
      FuzzConfig config = file.config.value_or(FuzzConfig{});
      replay_flags.ApplyTo(config);
      ValidateConfig(config);
      Simulation sim = Replay(model, config, file.sequences.front());
      Emit(ExportDocument(model, source, config, ReplayResult(sim)), output_path,
           out);
      return kExitOk;
    }
    return Serve(port, results_dir, ui_dir, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.message << "\n";
    return kExitIoFailure;
  } catch (const ParseError& e) {
    err << contract_path << ":" << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace contractsim
