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

#include "contractsim/fuzz.h"

#include <algorithm>
#include <set>
#include <utility>

namespace contractsim {

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection sampling over the largest multiple of bound.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Uint Rng::UpTo(Uint max) {
  if (max < ~std::uint64_t{0}) {
    return Below(static_cast<std::uint64_t>(max) + 1);
  }
  // Mask to the bit width of max so each draw is accepted with p > 1/2.
  Uint mask = max;
  for (int shift = 1; shift < 128; shift <<= 1) mask |= mask >> shift;
  Uint x;
  do {
    x = ((static_cast<Uint>(engine_()) << 64) | engine_()) & mask;
  } while (x > max);
  return x;
}

std::string_view BugKindName(BugKind kind) {
  return kind == BugKind::kArithmeticOverflow ? "arithmetic_overflow"
                                              : "transfer_failure";
}

std::optional<BugKind> ParseBugKind(std::string_view name) {
  if (name == "arithmetic_overflow") return BugKind::kArithmeticOverflow;
  if (name == "transfer_failure") return BugKind::kTransferFailure;
  return std::nullopt;
}

namespace {

constexpr std::uint64_t kSmallArgLimit = 16;

Value GenerateArg(ValueType type, const FuzzConfig& config, Rng& rng) {
  if (type == ValueType::kAddress) {
    return Address(rng.Below(static_cast<std::uint64_t>(config.num_users)));
  }
  switch (rng.Below(4)) {
    case 0:
      return Uint{0};
    case 1:
      return Uint{1};
    case 2:
      return static_cast<Uint>(2 + rng.Below(kSmallArgLimit - 1));
    default:
      return config.max_value_per_call;
  }
}

void RegenerateInputs(FunctionCall& call, const FunctionDecl& fn,
                      const FuzzConfig& config, Rng& rng) {
  call.value = fn.payable ? rng.UpTo(config.max_value_per_call) : Uint{0};
  call.args.clear();
  for (const auto& param : fn.params) {
    call.args.push_back(GenerateArg(param.type, config, rng));
  }
}

}  // namespace

FunctionCall GenerateCall(const ContractModel& model, const FuzzConfig& config,
                          Rng& rng) {
  if (model.functions.empty()) {
    throw ModelError("contract '" + model.name + "' has no functions");
  }
  const FunctionDecl& fn = model.functions[rng.Below(model.functions.size())];
  FunctionCall call;
  call.function = fn.name;
  call.caller = static_cast<UserIndex>(
      rng.Below(static_cast<std::uint64_t>(config.num_users)));
  RegenerateInputs(call, fn, config, rng);
  return call;
}

CallSequence Mutate(CallSequence sequence, const ContractModel& model,
                    const FuzzConfig& config, Rng& rng, MutationOp* applied) {
  if (sequence.empty()) sequence.push_back(GenerateCall(model, config, rng));

  MutationOp op;
  do {
    op = static_cast<MutationOp>(rng.Below(kMutationOpCount));
  } while (sequence.size() < 2 &&
           (op == MutationOp::kDelete || op == MutationOp::kSwapAdjacent));

  const std::size_t n = sequence.size();
  switch (op) {
    case MutationOp::kInsert: {
      std::size_t at = rng.Below(n + 1);
      sequence.insert(sequence.begin() + static_cast<std::ptrdiff_t>(at),
                      GenerateCall(model, config, rng));
      break;
    }
    case MutationOp::kDelete:
      sequence.erase(sequence.begin() +
                     static_cast<std::ptrdiff_t>(rng.Below(n)));
      break;
    case MutationOp::kReplaceInputs: {
      FunctionCall& call = sequence[rng.Below(n)];
      const FunctionDecl* fn = model.FindFunction(call.function);
      if (fn != nullptr) RegenerateInputs(call, *fn, config, rng);
      break;
    }
    case MutationOp::kReplaceCaller:
      sequence[rng.Below(n)].caller = static_cast<UserIndex>(
          rng.Below(static_cast<std::uint64_t>(config.num_users)));
      break;
    case MutationOp::kDuplicate: {
      std::size_t at = rng.Below(n);
      FunctionCall copy = sequence[at];
      sequence.insert(sequence.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                      std::move(copy));
      break;
    }
    case MutationOp::kSwapAdjacent: {
      std::size_t at = rng.Below(n - 1);
      std::swap(sequence[at], sequence[at + 1]);
      break;
    }
  }

  while (sequence.size() > static_cast<std::size_t>(config.max_sequence_length)) {
    sequence.pop_back();
  }
  if (applied != nullptr) *applied = op;
  return sequence;
}

std::vector<BugKind> DetectBugs(const Simulation& simulation) {
  std::vector<BugKind> kinds;
  auto note = [&](BugKind kind) {
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      kinds.push_back(kind);
    }
  };
  for (const auto& record : simulation.records) {
    if (record.revert_reason == RevertReason::kArithmeticOverflow) {
      note(BugKind::kArithmeticOverflow);
    } else if (record.revert_reason == RevertReason::kTransferFailure) {
      note(BugKind::kTransferFailure);
    }
  }
  return kinds;
}

namespace {

std::optional<BugKind> BugOf(RevertReason reason) {
  if (reason == RevertReason::kArithmeticOverflow) {
    return BugKind::kArithmeticOverflow;
  }
  if (reason == RevertReason::kTransferFailure) {
    return BugKind::kTransferFailure;
  }
  return std::nullopt;
}

class FuzzLoop {
 public:
  FuzzLoop(const ContractModel& model, const FuzzConfig& config)
      : model_(model), config_(config), rng_(config.rng_seed) {}

  FuzzResult Run(std::span<const CallSequence> initial_seeds) {
    if (initial_seeds.empty()) {
      CallSequence seed;
      std::size_t length =
          1 + rng_.Below(static_cast<std::uint64_t>(config_.max_sequence_length));
      for (std::size_t i = 0; i < length; ++i) {
        seed.push_back(GenerateCall(model_, config_, rng_));
      }
      Consider(std::move(seed));
    } else {
      for (const auto& seed : initial_seeds) Consider(seed);
    }

    for (int i = 0; i < config_.iteration_budget; ++i) {
      const auto& parent = pool_[rng_.Below(pool_.size())];
      Consider(Mutate(parent.Calls(), model_, config_, rng_));
    }

    FuzzResult result;
    result.iterations_run = config_.iteration_budget;
    result.seed_pool_size = static_cast<int>(pool_.size());
    result.global_coverage = std::move(global_);
    result.bugs = std::move(bugs_);
    std::size_t keep = std::min(pool_.size(),
                                static_cast<std::size_t>(config_.max_simulations));
    result.simulations.assign(std::make_move_iterator(pool_.begin()),
                              std::make_move_iterator(pool_.begin() +
                                  static_cast<std::ptrdiff_t>(keep)));
    return result;
  }

 private:
  void Consider(CallSequence sequence) {
    Simulation sim = Replay(model_, config_, sequence);
    RecordBugs(sim, sequence);
    bool grew = std::any_of(sim.coverage.begin(), sim.coverage.end(),
                            [&](int site) { return !global_.count(site); });
    if (!grew) return;
    global_.insert(sim.coverage.begin(), sim.coverage.end());
    pool_.push_back(std::move(sim));
  }

  void RecordBugs(const Simulation& sim, const CallSequence& sequence) {
    for (const auto& record : sim.records) {
      auto kind = BugOf(record.revert_reason);
      if (!kind) continue;
      if (!seen_bugs_.emplace(*kind, record.call.function).second) continue;
      bugs_.push_back({*kind, record.call.function, sequence});
    }
  }

  const ContractModel& model_;
  const FuzzConfig& config_;
  Rng rng_;
  std::vector<Simulation> pool_;
  Coverage global_;
  std::vector<BugReport> bugs_;
  std::set<std::pair<BugKind, std::string>> seen_bugs_;
};

}  // namespace

FuzzResult Fuzz(const ContractModel& model, const FuzzConfig& config,
                std::span<const CallSequence> initial_seeds) {
  ValidateConfig(config);
  if (model.functions.empty()) {
    throw ModelError("contract '" + model.name + "' has no functions");
  }
  for (const auto& seed : initial_seeds) {
    if (seed.empty()) throw UsageError("initial seed sequences must not be empty");
  }
  FuzzLoop loop(model, config);
  return loop.Run(initial_seeds);
}

}  // namespace contractsim
