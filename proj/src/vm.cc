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

#include "contractsim/vm.h"

#include <array>
#include <utility>

namespace contractsim {

void ValidateConfig(const FuzzConfig& config) {
  if (config.num_users < 1) throw ConfigError("num_users must be at least 1");
  if (config.owner_index < 0 || config.owner_index >= config.num_users) {
    throw ConfigError("owner index " + std::to_string(config.owner_index) +
                      " is out of range for " +
                      std::to_string(config.num_users) + " users");
  }
  if (config.endowment == 0) throw ConfigError("endowment must be positive");
  // Net-balance series are signed, so the total supply must fit in an Int.
  constexpr Uint kMaxSupply = kUintMax >> 1;
  if (config.endowment > kMaxSupply / static_cast<Uint>(config.num_users)) {
    throw ConfigError("num_users * endowment exceeds 2^127 - 1");
  }
  if (config.iteration_budget < 0) {
    throw ConfigError("iteration budget must not be negative");
  }
  if (config.max_sequence_length < 1) {
    throw ConfigError("max sequence length must be at least 1");
  }
  if (config.max_simulations < 1) {
    throw ConfigError("max simulations must be at least 1");
  }
}

std::string Recipient::ToString() const {
  return is_others() ? "others" : std::to_string(user());
}

std::optional<Recipient> Recipient::Parse(std::string_view text) {
  if (text == "others") return Others();
  auto index = ParseUint(text);
  if (!index || *index > 0xffffffffu) return std::nullopt;
  return User(static_cast<UserIndex>(*index));
}

Recipient Classify(Address address, int num_users) {
  if (!address.is_zero() &&
      address.raw() < static_cast<std::uint64_t>(num_users)) {
    return Recipient::User(static_cast<UserIndex>(address.raw()));
  }
  return Recipient::Others();
}

namespace {

constexpr std::array<std::pair<RevertReason, std::string_view>, 9>
    kRevertNames = {{
        {RevertReason::kNone, "none"},
        {RevertReason::kNonPayableValue, "non_payable_value"},
        {RevertReason::kInsufficientBalance, "insufficient_balance"},
        {RevertReason::kRequireFailed, "require_failed"},
        {RevertReason::kTransferFailure, "transfer_failure"},
        {RevertReason::kArithmeticOverflow, "arithmetic_overflow"},
        {RevertReason::kDivisionByZero, "division_by_zero"},
        {RevertReason::kIndexOutOfRange, "index_out_of_range"},
        {RevertReason::kRandomBoundZero, "random_bound_zero"},
    }};

}  // namespace

std::string_view RevertReasonName(RevertReason reason) {
  for (const auto& [r, name] : kRevertNames) {
    if (r == reason) return name;
  }
  return "none";
}

std::optional<RevertReason> ParseRevertReason(std::string_view name) {
  for (const auto& [r, n] : kRevertNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::vector<FunctionCall> Simulation::Calls() const {
  std::vector<FunctionCall> calls;
  calls.reserve(records.size());
  for (const auto& r : records) calls.push_back(r.call);
  return calls;
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::optional<Uint> DrawRandom(WorldState& world, Uint bound) {
  if (bound == 0) return std::nullopt;
  std::uint64_t key = SplitMix64(world.rng_seed);
  key = SplitMix64(key ^ world.call_counter);
  key = SplitMix64(key ^ world.draw_ordinal);
  ++world.draw_ordinal;
  Uint wide = (static_cast<Uint>(SplitMix64(key)) << 64) |
              SplitMix64(key ^ 0x5851f42d4c957f2dULL);
  return wide % bound;
}

BalanceSnapshot Balances(const WorldState& world) {
  return {world.contract_balance, world.user_balances, world.others_received};
}

WorldState InitWorld(const ContractModel& model, const FuzzConfig& config) {
  ValidateConfig(config);
  WorldState world;
  world.user_balances.assign(config.num_users, config.endowment);
  world.rng_seed = config.rng_seed;
  for (const auto& var : model.state_vars) {
    StorageValue value;
    switch (var.type) {
      case VarType::kUint:
        value = var.initializer ? std::get<Uint>(*var.initializer) : Uint{0};
        break;
      case VarType::kAddress:
        value = var.initializer ? std::get<Address>(*var.initializer)
                                : Address::Zero();
        break;
      case VarType::kMapping:
        value = Mapping{};
        break;
      case VarType::kAddressArray:
        value = AddressArray{};
        break;
    }
    world.storage[var.name] = std::move(value);
  }
  world.storage[std::string(kOwnerVar)] =
      Address(static_cast<std::uint64_t>(config.owner_index));
  return world;
}

namespace {

struct RevertSignal {
  RevertReason reason;
};

[[noreturn]] void Revert(RevertReason reason) { throw RevertSignal{reason}; }

Uint Checked(std::optional<Uint> v) {
  if (!v) Revert(RevertReason::kArithmeticOverflow);
  return *v;
}

class Executor {
 public:
  Executor(WorldState& world, const FunctionDecl& fn, const FunctionCall& call,
           int num_users, CallRecord& record)
      : world_(world), call_(call), num_users_(num_users), record_(record) {
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      params_.emplace(fn.params[i].name, call.args[i]);
    }
  }

  void Run(const std::vector<Stmt>& body) {
    for (const Stmt& s : body) Exec(s);
  }

 private:
  void Cover(int site) { record_.covered_sites.insert(site); }

  void Exec(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kRequire:
        if (std::get<bool>(Eval(*s.value))) {
          Cover(s.first_site);
        } else {
          Cover(s.first_site + 1);
          Revert(RevertReason::kRequireFailed);
        }
        break;
      case StmtKind::kIf:
        if (std::get<bool>(Eval(*s.value))) {
          Cover(s.first_site);
          Run(s.then_body);
        } else {
          Cover(s.first_site + 1);
          Run(s.else_body);
        }
        break;
      case StmtKind::kAssign:
        Assign(*s.target, s.assign_op, *s.value);
        break;
      case StmtKind::kTransfer:
        Transfer(std::get<Address>(Eval(*s.target)),
                 std::get<Uint>(Eval(*s.value)));
        break;
      case StmtKind::kPush: {
        Address element = std::get<Address>(Eval(*s.value));
        std::get<AddressArray>(world_.storage.find(s.var)->second)
            .push_back(element);
        break;
      }
      case StmtKind::kDelete:
        Delete(s);
        break;
    }
  }

  void Transfer(Address to, Uint amount) {
    if (amount == 0 || amount > world_.contract_balance) {
      Revert(RevertReason::kTransferFailure);
    }
    world_.contract_balance -= amount;
    Recipient recipient = Classify(to, num_users_);
    if (recipient.is_others()) {
      world_.others_received = Checked(CheckedAdd(world_.others_received, amount));
    } else {
      Uint& balance = world_.user_balances[recipient.user()];
      balance = Checked(CheckedAdd(balance, amount));
    }
    record_.internal_txs.push_back({recipient, amount});
  }

  StorageValue& Slot(const std::string& name) {
    return world_.storage.find(name)->second;
  }

  void Assign(const Expr& target, AssignOp op, const Expr& rhs) {
    if (target.kind == ExprKind::kStateVar) {
      Value value = Eval(rhs);
      StorageValue& slot = Slot(target.name);
      if (op == AssignOp::kSet) {
        if (const auto* u = std::get_if<Uint>(&value)) {
          slot = *u;
        } else {
          slot = std::get<Address>(value);
        }
        return;
      }
      slot = Combine(std::get<Uint>(slot), op, std::get<Uint>(value));
      return;
    }

    // Indexed target: key/index first, then the right-hand side.
    Value key = Eval(*target.operands[0]);
    Value value = Eval(rhs);
    StorageValue& slot = Slot(target.name);
    if (auto* mapping = std::get_if<Mapping>(&slot)) {
      Address k = std::get<Address>(key);
      auto it = mapping->find(k);
      Uint current = it == mapping->end() ? Uint{0} : it->second;
      Uint next = op == AssignOp::kSet
                      ? std::get<Uint>(value)
                      : Combine(current, op, std::get<Uint>(value));
      if (next == 0) {
        mapping->erase(k);
      } else {
        (*mapping)[k] = next;
      }
      return;
    }
    auto& array = std::get<AddressArray>(slot);
    Uint i = std::get<Uint>(key);
    if (i >= array.size()) Revert(RevertReason::kIndexOutOfRange);
    array[static_cast<std::size_t>(i)] = std::get<Address>(value);
  }

  static Uint Combine(Uint current, AssignOp op, Uint operand) {
    return op == AssignOp::kAdd ? Checked(CheckedAdd(current, operand))
                                : Checked(CheckedSub(current, operand));
  }

  void Delete(const Stmt& s) {
    if (!s.target) {
      StorageValue& slot = Slot(s.var);
      if (auto* m = std::get_if<Mapping>(&slot)) m->clear();
      if (auto* a = std::get_if<AddressArray>(&slot)) a->clear();
      return;
    }
    const Expr& target = *s.target;
    if (target.kind == ExprKind::kStateVar) {
      StorageValue& slot = Slot(target.name);
      if (std::holds_alternative<Uint>(slot)) {
        slot = Uint{0};
      } else {
        slot = Address::Zero();
      }
      return;
    }
    Value key = Eval(*target.operands[0]);
    StorageValue& slot = Slot(target.name);
    if (auto* mapping = std::get_if<Mapping>(&slot)) {
      mapping->erase(std::get<Address>(key));
      return;
    }
    auto& array = std::get<AddressArray>(slot);
    Uint i = std::get<Uint>(key);
    if (i >= array.size()) Revert(RevertReason::kIndexOutOfRange);
    array[static_cast<std::size_t>(i)] = Address::Zero();
  }

  Value Eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kLiteral:
        return e.literal;
      case ExprKind::kStateVar: {
        const StorageValue& slot = Slot(e.name);
        if (const auto* u = std::get_if<Uint>(&slot)) return *u;
        return std::get<Address>(slot);
      }
      case ExprKind::kParam:
        return params_.at(e.name);
      case ExprKind::kMsgSender:
        return Address(call_.caller);
      case ExprKind::kMsgValue:
        return call_.value;
      case ExprKind::kThisBalance:
        return world_.contract_balance;
      case ExprKind::kRandom: {
        auto drawn = DrawRandom(world_, std::get<Uint>(Eval(*e.operands[0])));
        if (!drawn) Revert(RevertReason::kRandomBoundZero);
        return *drawn;
      }
      case ExprKind::kIndex: {
        Value key = Eval(*e.operands[0]);
        const StorageValue& slot = Slot(e.name);
        if (const auto* mapping = std::get_if<Mapping>(&slot)) {
          auto it = mapping->find(std::get<Address>(key));
          return it == mapping->end() ? Uint{0} : it->second;
        }
        const auto& array = std::get<AddressArray>(slot);
        Uint i = std::get<Uint>(key);
        if (i >= array.size()) Revert(RevertReason::kIndexOutOfRange);
        return array[static_cast<std::size_t>(i)];
      }
      case ExprKind::kLength:
        return static_cast<Uint>(std::get<AddressArray>(Slot(e.name)).size());
      case ExprKind::kNot:
        return !std::get<bool>(Eval(*e.operands[0]));
      case ExprKind::kBinary:
        return EvalBinary(e);
    }
    return Uint{0};
  }

  Value EvalBinary(const Expr& e) {
    if (e.op == BinaryOp::kAnd) {
      return std::get<bool>(Eval(*e.operands[0])) &&
             std::get<bool>(Eval(*e.operands[1]));
    }
    if (e.op == BinaryOp::kOr) {
      return std::get<bool>(Eval(*e.operands[0])) ||
             std::get<bool>(Eval(*e.operands[1]));
    }
    Value lhs = Eval(*e.operands[0]);
    Value rhs = Eval(*e.operands[1]);
    if (e.op == BinaryOp::kEq) return lhs == rhs;
    if (e.op == BinaryOp::kNe) return lhs != rhs;

    Uint a = std::get<Uint>(lhs);
    Uint b = std::get<Uint>(rhs);
    switch (e.op) {
      case BinaryOp::kAdd:
        return Checked(CheckedAdd(a, b));
      case BinaryOp::kSub:
        return Checked(CheckedSub(a, b));
      case BinaryOp::kMul:
        return Checked(CheckedMul(a, b));
      case BinaryOp::kDiv:
        if (b == 0) Revert(RevertReason::kDivisionByZero);
        return a / b;
      case BinaryOp::kMod:
        if (b == 0) Revert(RevertReason::kDivisionByZero);
        return a % b;
      case BinaryOp::kLt:
        return a < b;
      case BinaryOp::kGt:
        return a > b;
      case BinaryOp::kLe:
        return a <= b;
      case BinaryOp::kGe:
        return a >= b;
      default:
        return false;
    }
  }

  WorldState& world_;
  const FunctionCall& call_;
  int num_users_;
  CallRecord& record_;
  std::map<std::string, Value, std::less<>> params_;
};

void CheckCall(const WorldState& world, const FunctionDecl* fn,
               const FunctionCall& call) {
  if (fn == nullptr) throw UsageError("unknown function '" + call.function + "'");
  if (call.caller >= world.user_balances.size()) {
    throw UsageError("caller " + std::to_string(call.caller) +
                     " is not a simulated user");
  }
  if (call.args.size() != fn->params.size()) {
    throw UsageError("function '" + fn->name + "' expects " +
                     std::to_string(fn->params.size()) + " arguments, got " +
                     std::to_string(call.args.size()));
  }
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    if (TypeOf(call.args[i]) != fn->params[i].type) {
      throw UsageError("argument '" + fn->params[i].name + "' of '" +
                       fn->name + "' must be " +
                       std::string(TypeName(fn->params[i].type)));
    }
  }
}

std::vector<StateChange> DiffValueVars(const ContractModel& model,
                                       const WorldState& before,
                                       const WorldState& after) {
  std::vector<StateChange> changes;
  for (const auto& var : model.state_vars) {
    if (!IsValueType(var.type)) continue;
    const StorageValue& old_slot = before.storage.find(var.name)->second;
    const StorageValue& new_slot = after.storage.find(var.name)->second;
    if (old_slot == new_slot) continue;
    StateChange change;
    change.var = var.name;
    if (var.type == VarType::kUint) {
      Uint old_value = std::get<Uint>(old_slot);
      Uint new_value = std::get<Uint>(new_slot);
      change.old_value = old_value;
      change.new_value = new_value;
      change.numeric_delta = SignedAmount::Difference(new_value, old_value);
    } else {
      change.old_value = std::get<Address>(old_slot);
      change.new_value = std::get<Address>(new_slot);
    }
    changes.push_back(std::move(change));
  }
  return changes;
}

}  // namespace

CallRecord ExecuteCall(WorldState& world, const ContractModel& model,
                       const FunctionCall& call, int index) {
  const FunctionDecl* fn = model.FindFunction(call.function);
  CheckCall(world, fn, call);

  CallRecord record;
  record.index = index;
  record.call = call;
  record.covered_sites.insert(fn->entry_site);

  const WorldState before = world;
  try {
    if (call.value > 0 && !fn->payable) Revert(RevertReason::kNonPayableValue);
    Uint& caller_balance = world.user_balances[call.caller];
    if (call.value > caller_balance) Revert(RevertReason::kInsufficientBalance);
    caller_balance -= call.value;
    world.contract_balance =
        Checked(CheckedAdd(world.contract_balance, call.value));
    record.inflow = call.value;

    Executor executor(world, *fn, call,
                      static_cast<int>(world.user_balances.size()), record);
    executor.Run(fn->body);
    ++world.call_counter;
    world.draw_ordinal = 0;
    record.state_changes = DiffValueVars(model, before, world);
  } catch (const RevertSignal& signal) {
    world = before;
    record.reverted = true;
    record.revert_reason = signal.reason;
    record.inflow = 0;
    record.internal_txs.clear();
    record.state_changes.clear();
  }
  record.balances_after = Balances(world);
  return record;
}

Simulation Replay(const ContractModel& model, const FuzzConfig& config,
                  std::span<const FunctionCall> sequence) {
  if (sequence.empty()) throw UsageError("cannot replay an empty sequence");
  WorldState world = InitWorld(model, config);
  Simulation sim;
  sim.records.reserve(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    CallRecord record =
        ExecuteCall(world, model, sequence[i], static_cast<int>(i));
    sim.coverage.insert(record.covered_sites.begin(),
                        record.covered_sites.end());
    sim.records.push_back(std::move(record));
  }
  return sim;
}

}  // namespace contractsim
