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

// Coverage-guided grey-box fuzzing over multi-user call sequences.
//
// The loop keeps a seed pool of call sequences. Each iteration picks a seed
// uniformly, applies one mutation, replays the result on a fresh world and
// admits it to the pool only if it reached a branch site never seen before.
// Sequences that revert with a checked-arithmetic or transfer failure also
// land in the bug pool. Output is a pure function of (model, config).

#ifndef CONTRACTSIM_FUZZ_H_
#define CONTRACTSIM_FUZZ_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contractsim/config.h"
#include "contractsim/minisol.h"
#include "contractsim/vm.h"

namespace contractsim {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Platform-independent random source. std::mt19937_64 output is specified
// by the standard; the bounded draws below avoid the implementation-defined
// std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, max].
  Uint UpTo(Uint max);

 private:
  std::mt19937_64 engine_;
};

using CallSequence = std::vector<FunctionCall>;

enum class BugKind { kArithmeticOverflow, kTransferFailure };

std::string_view BugKindName(BugKind kind);
std::optional<BugKind> ParseBugKind(std::string_view name);

struct BugReport {
  BugKind kind = BugKind::kArithmeticOverflow;
  // Function whose call reverted with this bug.
  std::string function;
  CallSequence sequence;

  friend bool operator==(const BugReport&, const BugReport&) = default;
};

struct FuzzResult {
  // Seed-pool entries in admission order, at most config.max_simulations.
  std::vector<Simulation> simulations;
  std::vector<BugReport> bugs;
  // Union over the whole seed pool.
  Coverage global_coverage;
  int iterations_run = 0;
  int seed_pool_size = 0;

  friend bool operator==(const FuzzResult&, const FuzzResult&) = default;
};

// Random call: uniform function and caller, value uniform in
// [0, max_value_per_call] when payable (0 otherwise), uint arguments drawn
// from {0, 1, small, max_value_per_call} and address arguments from the
// users. Throws ModelError if the contract has no functions.
FunctionCall GenerateCall(const ContractModel& model, const FuzzConfig& config,
                          Rng& rng);

enum class MutationOp {
  kInsert,
  kDelete,
  kReplaceInputs,
  kReplaceCaller,
  kDuplicate,
  kSwapAdjacent,
};

inline constexpr int kMutationOpCount = 6;

// Applies exactly one applicable operator, chosen uniformly. Operators that
// need two calls are re-drawn on length-1 input. The result is clamped to
// [1, max_sequence_length].
CallSequence Mutate(CallSequence sequence, const ContractModel& model,
                    const FuzzConfig& config, Rng& rng,
                    MutationOp* applied = nullptr);

// Bug kinds revealed by a replayed simulation, each once, in order of first
// occurrence.
std::vector<BugKind> DetectBugs(const Simulation& simulation);

// Runs the fuzz loop. `initial_seeds`, when given, replace the random
// bootstrap sequence. Throws ModelError, ConfigError and (for malformed
// initial seeds) UsageError.
FuzzResult Fuzz(const ContractModel& model, const FuzzConfig& config,
                std::span<const CallSequence> initial_seeds = {});

}  // namespace contractsim

#endif  // CONTRACTSIM_FUZZ_H_
