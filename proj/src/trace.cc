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

#include "contractsim/trace.h"

#include <algorithm>

namespace contractsim {

BalanceSeries NetBalanceSeries(const Simulation& sim, const FuzzConfig& config) {
  // Accumulated from per-call flows, not from the balance snapshots, so the
  // snapshots remain an independent check.
  BalanceSeries series;
  series.users.assign(config.num_users, {});
  Int contract = 0;
  Int others = 0;
  std::vector<Int> users(config.num_users, 0);

  for (const auto& record : sim.records) {
    if (!record.reverted) {
      Int inflow = static_cast<Int>(record.inflow);
      contract += inflow;
      users[record.call.caller] -= inflow;
      for (const auto& tx : record.internal_txs) {
        Int value = static_cast<Int>(tx.value);
        contract -= value;
        if (tx.to.is_others()) {
          others += value;
        } else {
          users[tx.to.user()] += value;
        }
      }
    }
    series.contract.push_back(contract);
    series.others.push_back(others);
    for (int u = 0; u < config.num_users; ++u) {
      series.users[u].push_back(users[u]);
    }
  }
  return series;
}

FlowClassification ClassifyFlows(const CallRecord& record) {
  FlowClassification flows;
  flows.to_contract = record.inflow > 0;
  const Recipient caller = Recipient::User(record.call.caller);
  for (const auto& tx : record.internal_txs) {
    if (tx.to == caller) {
      flows.to_caller = true;
    } else {
      flows.to_others = true;
    }
    flows.links.push_back({record.call.caller, tx.to});
  }
  return flows;
}

std::vector<FunctionSummary> SummarizeFunctions(const Simulation& sim,
                                                const ContractModel& model) {
  std::vector<FunctionSummary> summaries;
  for (const auto& record : sim.records) {
    auto it = std::find_if(summaries.begin(), summaries.end(), [&](auto& s) {
      return s.function == record.call.function;
    });
    if (it == summaries.end()) {
      FunctionSummary fresh;
      fresh.function = record.call.function;
      const FunctionDecl* fn = model.FindFunction(record.call.function);
      fresh.payable = fn != nullptr && fn->payable;
      summaries.push_back(std::move(fresh));
      it = summaries.end() - 1;
    }
    FunctionSummary& s = *it;
    ++s.total_calls;
    FlowClassification flows = ClassifyFlows(record);
    if (flows.to_contract) ++s.calls_to_contract;
    if (!record.internal_txs.empty()) ++s.calls_triggering_outflow;
    s.to_contract |= flows.to_contract;
    s.to_caller |= flows.to_caller;
    s.to_others |= flows.to_others;
  }
  return summaries;
}

std::vector<VariableSeries> VariableChangeSeries(const Simulation& sim,
                                                 const ContractModel& model) {
  std::vector<VariableSeries> rows;
  for (const auto& var : model.state_vars) {
    if (!IsValueType(var.type)) continue;
    VariableSeries row;
    row.var = var.name;
    row.kind = var.type == VarType::kUint ? VariableKind::kNumeric
                                          : VariableKind::kAddress;
    bool any = false;
    for (const auto& record : sim.records) {
      auto change = std::find_if(
          record.state_changes.begin(), record.state_changes.end(),
          [&](const StateChange& c) { return c.var == var.name; });
      if (change == record.state_changes.end()) {
        row.cells.emplace_back();
        continue;
      }
      any = true;
      row.cells.push_back(VariableChange{change->old_value, change->new_value,
                                         change->numeric_delta});
    }
    if (any) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace contractsim
