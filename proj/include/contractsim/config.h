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

#ifndef CONTRACTSIM_CONFIG_H_
#define CONTRACTSIM_CONFIG_H_

#include <cstdint>
#include <stdexcept>

#include "contractsim/uint128.h"

namespace contractsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simulation setup: the user population, their starting funds, who owns the
// contract, and the fuzzing budget.
struct FuzzConfig {
  int num_users = 3;
  Uint endowment = 100;
  int owner_index = 0;
  int iteration_budget = 2000;
  std::uint64_t rng_seed = 42;
  Uint max_value_per_call = 10;
  int max_sequence_length = 16;
  int max_simulations = 12;

  friend bool operator==(const FuzzConfig&, const FuzzConfig&) = default;
};

// Throws ConfigError naming the first violated constraint.
void ValidateConfig(const FuzzConfig& config);

}  // namespace contractsim

#endif  // CONTRACTSIM_CONFIG_H_
