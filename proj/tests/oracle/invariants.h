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

// Independent re-derivations used as test oracles. Each checker recomputes
// a quantity from first principles (config, call inputs and internal
// transactions) and compares it with what the library produced. An empty
// result means no violation.

#ifndef CONTRACTSIM_TESTS_ORACLE_INVARIANTS_H_
#define CONTRACTSIM_TESTS_ORACLE_INVARIANTS_H_

#include <map>
#include <optional>
#include <string>

#include "contractsim/config.h"
#include "contractsim/minisol.h"
#include "contractsim/trace.h"
#include "contractsim/vm.h"

namespace contractsim::testing {

using Violation = std::optional<std::string>;

// contract + users + others equals num_users * endowment after the call.
Violation CheckConservation(const CallRecord& record, const FuzzConfig& config);

// Replays inflows and internal transactions from the initial endowments and
// compares with every balances_after snapshot.
Violation CheckSnapshotsFromFlows(const Simulation& sim,
                                  const FuzzConfig& config);

// NetBalanceSeries equals snapshot minus starting balance at every index.
Violation CheckSeriesAgainstSnapshots(const Simulation& sim,
                                      const FuzzConfig& config);

// Walks value-type variables from their initial values: each change's old
// value is the running value, deltas are new - old, reverted calls carry no
// changes. On success, *final_values (if given) receives the running
// values keyed by variable name.
Violation CheckStateChangeChaining(
    const Simulation& sim, const ContractModel& model,
    const FuzzConfig& config,
    std::map<std::string, Value>* final_values = nullptr);

// Recounts every FunctionSummary field directly from the records.
Violation CheckSummaryRecount(const Simulation& sim,
                              const ContractModel& model);

}  // namespace contractsim::testing

#endif  // CONTRACTSIM_TESTS_ORACLE_INVARIANTS_H_
