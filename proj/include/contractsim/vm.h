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

// Deterministic MiniSol interpreter. Every call produces a CallRecord holding
// the effects a trace parser would extract from an EVM run: value received,
// internal transactions, value-type state changes and post-call balances.
// A reverted call leaves the world exactly as it found it.

#ifndef CONTRACTSIM_VM_H_
#define CONTRACTSIM_VM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "contractsim/config.h"
#include "contractsim/minisol.h"
#include "contractsim/value.h"

namespace contractsim {

// Calling an unknown function, from an unknown user, or with arguments that
// do not match the signature. Not a revert: the call is malformed.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using UserIndex = std::uint32_t;

// Mapping entries holding 0 are never stored.
using Mapping = std::map<Address, Uint>;
using AddressArray = std::vector<Address>;
using StorageValue = std::variant<Uint, Address, Mapping, AddressArray>;

struct WorldState {
  Uint contract_balance = 0;
  std::vector<Uint> user_balances;
  // Cumulative value paid to addresses outside the user set.
  Uint others_received = 0;
  std::map<std::string, StorageValue, std::less<>> storage;
  std::uint64_t rng_seed = 0;
  // Number of successful calls so far.
  std::uint64_t call_counter = 0;
  // random() draws made by the call in progress; 0 between calls.
  std::uint64_t draw_ordinal = 0;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

struct FunctionCall {
  UserIndex caller = 0;
  std::string function;
  Uint value = 0;
  std::vector<Value> args;

  friend bool operator==(const FunctionCall&, const FunctionCall&) = default;
};

// Receiver of an internal transaction: a simulated user or the aggregated
// OTHERS pseudo-address.
class Recipient {
 public:
  static constexpr Recipient User(UserIndex index) {
    return Recipient(static_cast<std::int64_t>(index));
  }
  static constexpr Recipient Others() { return Recipient(-1); }

  constexpr bool is_others() const { return id_ < 0; }
  constexpr UserIndex user() const { return static_cast<UserIndex>(id_); }

  // "others" or the decimal user index.
  std::string ToString() const;
  static std::optional<Recipient> Parse(std::string_view text);

  friend constexpr bool operator==(const Recipient&,
                                   const Recipient&) = default;

 private:
  constexpr explicit Recipient(std::int64_t id) : id_(id) {}
  std::int64_t id_;
};

// Buckets an address against a population of num_users.
Recipient Classify(Address address, int num_users);

struct InternalTransaction {
  Recipient to = Recipient::Others();
  Uint value = 0;

  friend bool operator==(const InternalTransaction&,
                         const InternalTransaction&) = default;
};

struct StateChange {
  std::string var;
  Value old_value;
  Value new_value;
  // new - old; present for uint variables only.
  std::optional<SignedAmount> numeric_delta;

  friend bool operator==(const StateChange&, const StateChange&) = default;
};

struct BalanceSnapshot {
  Uint contract = 0;
  std::vector<Uint> users;
  Uint others = 0;

  friend bool operator==(const BalanceSnapshot&,
                         const BalanceSnapshot&) = default;
};

enum class RevertReason {
  kNone,
  kNonPayableValue,
  kInsufficientBalance,
  kRequireFailed,
  kTransferFailure,
  kArithmeticOverflow,
  kDivisionByZero,
  kIndexOutOfRange,
  kRandomBoundZero,
};

std::string_view RevertReasonName(RevertReason reason);
std::optional<RevertReason> ParseRevertReason(std::string_view name);

using Coverage = std::set<int>;

struct CallRecord {
  int index = 0;
  FunctionCall call;
  bool reverted = false;
  RevertReason revert_reason = RevertReason::kNone;
  Uint inflow = 0;
  std::vector<InternalTransaction> internal_txs;
  std::vector<StateChange> state_changes;
  BalanceSnapshot balances_after;
  Coverage covered_sites;

  friend bool operator==(const CallRecord&, const CallRecord&) = default;
};

struct Simulation {
  std::vector<CallRecord> records;
  Coverage coverage;

  std::vector<FunctionCall> Calls() const;

  friend bool operator==(const Simulation&, const Simulation&) = default;
};

// Fresh world: every user holds the endowment, the contract holds nothing,
// storage takes declared initializers and `owner` the configured user.
// Throws ConfigError.
WorldState InitWorld(const ContractModel& model, const FuzzConfig& config);

// Runs one call. Reverts are recorded, not thrown; the world is restored to
// its pre-call state. Throws UsageError for malformed calls.
CallRecord ExecuteCall(WorldState& world, const ContractModel& model,
                       const FunctionCall& call, int index = 0);

// Executes the sequence on a fresh world. Throws UsageError (empty sequence
// or malformed call) and ConfigError.
Simulation Replay(const ContractModel& model, const FuzzConfig& config,
                  std::span<const FunctionCall> sequence);

// Value in [0, bound) keyed by (world seed, call counter, draw ordinal);
// advances the draw ordinal. std::nullopt (a revert) when bound is 0.
std::optional<Uint> DrawRandom(WorldState& world, Uint bound);

BalanceSnapshot Balances(const WorldState& world);

}  // namespace contractsim

#endif  // CONTRACTSIM_VM_H_
