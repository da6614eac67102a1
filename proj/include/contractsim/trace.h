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

// Analytics derived from a Simulation: net-balance series, per-function
// summaries, per-call flow classification and value-type variable series.
// Reverted calls stay in every series but contribute no flows or changes.

#ifndef CONTRACTSIM_TRACE_H_
#define CONTRACTSIM_TRACE_H_

#include <optional>
#include <string>
#include <vector>

#include "contractsim/config.h"
#include "contractsim/minisol.h"
#include "contractsim/vm.h"

namespace contractsim {

// Net balance after each call, relative to the starting balance (0 for the
// contract and OTHERS, the endowment for users).
struct BalanceSeries {
  std::vector<Int> contract;
  std::vector<std::vector<Int>> users;
  std::vector<Int> others;

  friend bool operator==(const BalanceSeries&, const BalanceSeries&) = default;
};

BalanceSeries NetBalanceSeries(const Simulation& sim, const FuzzConfig& config);

struct FunctionSummary {
  std::string function;
  bool payable = false;
  int total_calls = 0;
  // Calls that carried value into the contract.
  int calls_to_contract = 0;
  // Calls that produced at least one internal transaction.
  int calls_triggering_outflow = 0;
  bool to_contract = false;
  bool to_caller = false;
  bool to_others = false;

  friend bool operator==(const FunctionSummary&,
                         const FunctionSummary&) = default;
};

// One summary per function called in `sim`, in order of first call.
std::vector<FunctionSummary> SummarizeFunctions(const Simulation& sim,
                                                const ContractModel& model);

struct FlowLink {
  UserIndex caller = 0;
  Recipient receiver = Recipient::Others();

  friend bool operator==(const FlowLink&, const FlowLink&) = default;
};

struct FlowClassification {
  bool to_contract = false;
  // Some internal transaction paid the caller.
  bool to_caller = false;
  // Some internal transaction paid anyone else, OTHERS included.
  bool to_others = false;
  // One caller -> receiver link per internal transaction.
  std::vector<FlowLink> links;

  friend bool operator==(const FlowClassification&,
                         const FlowClassification&) = default;
};

FlowClassification ClassifyFlows(const CallRecord& record);

enum class VariableKind { kNumeric, kAddress };

struct VariableChange {
  Value old_value;
  Value new_value;
  std::optional<SignedAmount> delta;

  friend bool operator==(const VariableChange&,
                         const VariableChange&) = default;
};

struct VariableSeries {
  std::string var;
  VariableKind kind = VariableKind::kNumeric;
  // One cell per call; std::nullopt where the variable did not change.
  std::vector<std::optional<VariableChange>> cells;

  friend bool operator==(const VariableSeries&,
                         const VariableSeries&) = default;
};

// Rows for the uint/address variables changed at least once, in declaration
// order. Mappings and arrays are never included.
std::vector<VariableSeries> VariableChangeSeries(const Simulation& sim,
                                                 const ContractModel& model);

}  // namespace contractsim

#endif  // CONTRACTSIM_TRACE_H_
