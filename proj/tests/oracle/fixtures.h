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

// Contract fixtures and random generators shared by the test binaries.

#ifndef CONTRACTSIM_TESTS_ORACLE_FIXTURES_H_
#define CONTRACTSIM_TESTS_ORACLE_FIXTURES_H_

#include <string>
#include <string_view>

#include "contractsim/config.h"
#include "contractsim/fuzz.h"
#include "contractsim/minisol.h"

namespace contractsim::testing {

// Path of contracts/<name>.msol in the source tree.
std::string ContractPath(std::string_view name);
std::string LoadContractSource(std::string_view name);
ContractModel LoadContract(std::string_view name);

// Ponzi without the `require(OwnerAccount > 0)` guard in ownerWithdraw.
extern const std::string_view kUnguardedPonziSource;
// A counter that starts one below the uint maximum.
extern const std::string_view kOverflowCounterSource;
// One function, no conditionals.
extern const std::string_view kSingleFunctionSource;

// A random well-typed contract over a fixed set of state variables,
// exercising every statement form and most expression forms.
std::string RandomContractSource(Rng& rng);

// A random valid configuration with small populations and budgets.
FuzzConfig RandomConfig(Rng& rng);

// 1..max_length calls from GenerateCall.
CallSequence RandomSequence(const ContractModel& model,
                            const FuzzConfig& config, Rng& rng,
                            int max_length);

}  // namespace contractsim::testing

#endif  // CONTRACTSIM_TESTS_ORACLE_FIXTURES_H_
