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

// Result documents and call-sequence files (schema in docs/schema.md).
//
// Serialization is canonical: keys sorted, two-space indent, trailing
// newline, currency and other 128-bit quantities as decimal strings. The
// bytes are a pure function of the document, and parse -> serialize is the
// identity on anything this module wrote.

#ifndef CONTRACTSIM_DOCUMENT_H_
#define CONTRACTSIM_DOCUMENT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "contractsim/config.h"
#include "contractsim/fuzz.h"
#include "contractsim/minisol.h"
#include "contractsim/trace.h"
#include "contractsim/vm.h"

namespace contractsim {

inline constexpr std::string_view kSchemaVersion = "1";

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateVarInfo {
  std::string name;
  VarType type = VarType::kUint;
  bool implicit = false;

  friend bool operator==(const StateVarInfo&, const StateVarInfo&) = default;
};

struct ContractInfo {
  std::string name;
  // "sha256:" followed by the hex digest of the source text.
  std::string source_digest;
  std::vector<FunctionSignature> interface;
  std::vector<StateVarInfo> state_vars;
  std::vector<BranchSite> branch_sites;

  friend bool operator==(const ContractInfo&, const ContractInfo&) = default;
};

ContractInfo DescribeContract(const ContractModel& model,
                              std::string_view source);

struct SimulationDocument {
  int id = 0;
  Simulation simulation;
  BalanceSeries balance_series;
  std::vector<FunctionSummary> function_summaries;
  std::vector<FlowClassification> flow_classifications;
  std::vector<VariableSeries> variable_series;

  friend bool operator==(const SimulationDocument&,
                         const SimulationDocument&) = default;
};

SimulationDocument AnalyzeSimulation(int id, Simulation sim,
                                     const ContractModel& model,
                                     const FuzzConfig& config);

struct ResultDocument {
  std::string schema_version = std::string(kSchemaVersion);
  ContractInfo contract;
  FuzzConfig config;
  std::vector<SimulationDocument> simulations;
  std::vector<BugReport> bugs;
  Coverage global_coverage;
  int iterations_run = 0;
  int seed_pool_size = 0;

  friend bool operator==(const ResultDocument&,
                         const ResultDocument&) = default;
};

ResultDocument BuildDocument(const ContractModel& model,
                             std::string_view source, const FuzzConfig& config,
                             const FuzzResult& result);

std::string SerializeDocument(const ResultDocument& document);
// Throws DocumentError on malformed input.
ResultDocument ParseDocument(std::string_view text);

// BuildDocument followed by SerializeDocument.
std::string ExportDocument(const ContractModel& model, std::string_view source,
                           const FuzzConfig& config, const FuzzResult& result);

// A FuzzResult holding one replayed simulation, its bugs and coverage.
FuzzResult ReplayResult(const Simulation& sim);

std::string SerializeSimulation(const SimulationDocument& simulation);

// ---- call-sequence files ------------------------------------------------

struct CallSequenceFile {
  std::optional<FuzzConfig> config;
  std::vector<CallSequence> sequences;
};

// {"schema_version", "config"?, "calls"}.
std::string SerializeCallSequence(const CallSequence& calls,
                                  const FuzzConfig* config = nullptr);
// Accepts a single sequence ("calls") or several ("sequences": [[...], ...]).
CallSequenceFile ParseCallSequences(std::string_view text);

// ---- JSON building blocks, shared with the HTTP service ------------------

nlohmann::json ConfigToJson(const FuzzConfig& config);
// Missing keys keep their defaults; integers may be given as numbers or
// decimal strings. Throws ConfigError on malformed values (the result is
// not validated).
FuzzConfig ConfigFromJson(const nlohmann::json& json);

nlohmann::json DocumentToJson(const ResultDocument& document);
std::string Canonical(const nlohmann::json& json);

std::string Sha256Hex(std::string_view data);

}  // namespace contractsim

#endif  // CONTRACTSIM_DOCUMENT_H_
