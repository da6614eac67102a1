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

#include <array>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "contractsim/vm.h"
#include "oracle/fixtures.h"

namespace contractsim {
namespace {

using testing::LoadContract;

FunctionCall Call(UserIndex caller, std::string function, Uint value = 0,
                  std::vector<Value> args = {}) {
  return {caller, std::move(function), value, std::move(args)};
}

const Uint& UintVar(const WorldState& w, const std::string& name) {
  return std::get<Uint>(w.storage.at(name));
}

const Address& AddressVar(const WorldState& w, const std::string& name) {
  return std::get<Address>(w.storage.at(name));
}

FuzzConfig OwnerConfig(int owner) {
  FuzzConfig config;
  config.owner_index = owner;
  return config;
}

RevertReason RevertOf(std::string_view source, const FunctionCall& call,
                      FuzzConfig config = {}) {
  ContractModel model = Parse(source);
  WorldState world = InitWorld(model, config);
  return ExecuteCall(world, model, call).revert_reason;
}

TEST(InitWorldTest, EndowsUsersAndBindsOwner) {
  ContractModel model = LoadContract("lottery");
  WorldState world = InitWorld(model, OwnerConfig(1));
  EXPECT_EQ(world.user_balances, (std::vector<Uint>{100, 100, 100}));
  EXPECT_EQ(world.contract_balance, 0);
  EXPECT_EQ(AddressVar(world, "owner"), Address(1));
  EXPECT_EQ(AddressVar(world, "winner"), Address::Zero());
  EXPECT_EQ(UintVar(world, "rounds"), 0);
  EXPECT_TRUE(std::get<AddressArray>(world.storage.at("players")).empty());
  EXPECT_EQ(world.storage.size(), model.state_vars.size());
}

TEST(InitWorldTest, AppliesInitializers) {
  WorldState world = InitWorld(LoadContract("ponzi"), {});
  EXPECT_EQ(UintVar(world, "Price"), 2);
}

TEST(InitWorldTest, RejectsBadConfig) {
  ContractModel model = LoadContract("lottery");
  EXPECT_THROW(InitWorld(model, OwnerConfig(5)), ConfigError);
  FuzzConfig broke;
  broke.endowment = 0;
  EXPECT_THROW(InitWorld(model, broke), ConfigError);
  FuzzConfig nobody;
  nobody.num_users = 0;
  nobody.owner_index = 0;
  EXPECT_THROW(InitWorld(model, nobody), ConfigError);
  FuzzConfig rich;
  rich.num_users = 2;
  rich.endowment = kUintMax / 3;
  EXPECT_THROW(InitWorld(model, rich), ConfigError);
}

TEST(ExecuteCallTest, EnterMovesValueIntoContract) {
  ContractModel model = LoadContract("lottery");
  WorldState world = InitWorld(model, OwnerConfig(1));
  CallRecord r = ExecuteCall(world, model, Call(0, "enter", 5));
  EXPECT_FALSE(r.reverted);
  EXPECT_EQ(r.inflow, 5);
  EXPECT_TRUE(r.internal_txs.empty());
  EXPECT_EQ(world.contract_balance, 5);
  EXPECT_EQ(world.user_balances[0], 95);
  EXPECT_EQ(r.balances_after, (BalanceSnapshot{5, {95, 100, 100}, 0}));
  EXPECT_EQ(world.call_counter, 1u);
}

TEST(ExecuteCallTest, NonOwnerPickWinnerRevertsWithoutEffects) {
  ContractModel model = LoadContract("lottery");
  WorldState world = InitWorld(model, OwnerConfig(1));
  ExecuteCall(world, model, Call(0, "enter", 3));
  WorldState before = world;
  CallRecord r = ExecuteCall(world, model, Call(2, "pickWinner"));
  EXPECT_TRUE(r.reverted);
  EXPECT_EQ(r.revert_reason, RevertReason::kRequireFailed);
  EXPECT_EQ(world, before);
  EXPECT_EQ(r.balances_after, Balances(before));
  // Entry, then the failing owner check (pickWinner sites are 3..7).
  EXPECT_EQ(r.covered_sites, (Coverage{3, 5}));
}

TEST(ExecuteCallTest, PonziPaysPreviousBuyerAndRecordsCaller) {
  ContractModel model = LoadContract("ponzi");
  WorldState world = InitWorld(model, {});
  ExecuteCall(world, model, Call(0, "BuyMessage", 4));
  CallRecord r = ExecuteCall(world, model, Call(2, "BuyMessage", 6));
  ASSERT_FALSE(r.reverted);
  ASSERT_EQ(r.internal_txs.size(), 1u);
  EXPECT_EQ(r.internal_txs[0], (InternalTransaction{Recipient::User(0), 3}));
  EXPECT_EQ(AddressVar(world, "LastAuthor"), Address(2));
  // 4 - 2 + 6 - 3 held for the owner; user 0 paid 4, got 2 (own first
  // purchase pays the owner, who is user 0) and then 3.
  EXPECT_EQ(UintVar(world, "OwnerAccount"), 5);
  EXPECT_EQ(world.user_balances, (std::vector<Uint>{101, 100, 94}));
  EXPECT_EQ(world.contract_balance, 5);
}

TEST(ExecuteCallTest, StateChangesAreNetPerCall) {
  ContractModel model = LoadContract("ponzi");
  WorldState world = InitWorld(model, {});
  CallRecord r = ExecuteCall(world, model, Call(1, "BuyMessage", 2));
  // LastAuthor goes zero -> owner -> caller inside one call; only the net
  // change is visible.
  ASSERT_EQ(r.state_changes.size(), 3u);
  EXPECT_EQ(r.state_changes[0].var, "LastAuthor");
  EXPECT_EQ(r.state_changes[0].old_value, Value(Address::Zero()));
  EXPECT_EQ(r.state_changes[0].new_value, Value(Address(1)));
  EXPECT_FALSE(r.state_changes[0].numeric_delta);
  EXPECT_EQ(r.state_changes[1].var, "OwnerAccount");
  EXPECT_EQ(r.state_changes[1].numeric_delta, (SignedAmount{false, 1}));
  EXPECT_EQ(r.state_changes[2].var, "Messages");
}

TEST(ExecuteCallTest, NegativeDeltaOnWithdraw) {
  ContractModel model = LoadContract("ponzi");
  WorldState world = InitWorld(model, {});
  ExecuteCall(world, model, Call(1, "BuyMessage", 9));
  CallRecord r = ExecuteCall(world, model, Call(0, "ownerWithdraw"));
  ASSERT_FALSE(r.reverted);
  ASSERT_EQ(r.state_changes.size(), 1u);
  EXPECT_EQ(r.state_changes[0].new_value, Value(Uint{0}));
  EXPECT_EQ(r.state_changes[0].numeric_delta, (SignedAmount{true, 5}));
  EXPECT_EQ(r.internal_txs, (std::vector<InternalTransaction>{{Recipient::User(0), 5}}));
}

TEST(ExecuteCallTest, TransfersOutsideUsersGoToOthers) {
  ContractModel model = LoadContract("splitter");
  WorldState world = InitWorld(model, {});
  CallRecord r = ExecuteCall(world, model, Call(1, "split", 7));
  ASSERT_FALSE(r.reverted);
  // partner is still the zero address, which is outside the user set too.
  EXPECT_EQ(r.internal_txs,
            (std::vector<InternalTransaction>{{Recipient::Others(), 3},
                                              {Recipient::Others(), 4}}));
  EXPECT_EQ(world.others_received, 7);
  EXPECT_EQ(r.balances_after.others, 7);
  EXPECT_EQ(world.contract_balance, 0);
}

TEST(ExecuteCallTest, RevertReasons) {
  const char* kSource = R"(contract R {
    uint n = 340282366920938463463374607431768211455;
    address[] xs;
    function pay() payable { }
    function free() { }
    function give(uint v) payable { msg.sender.transfer(v); }
    function bump() { n += 1; }
    function div(uint d) { n = n / d; }
    function mod(uint d) { n = n % d; }
    function at(uint i) { xs.push(msg.sender); xs.push(xs[i]); }
    function roll(uint b) { n = random(b); }
    function check(uint v) { require(v == 1); }
})";
  const std::string_view source = kSource;
  EXPECT_EQ(RevertOf(source, Call(0, "free", 1)), RevertReason::kNonPayableValue);
  EXPECT_EQ(RevertOf(source, Call(0, "pay", 101)), RevertReason::kInsufficientBalance);
  EXPECT_EQ(RevertOf(source, Call(0, "pay", 100)), RevertReason::kNone);
  EXPECT_EQ(RevertOf(source, Call(0, "give", 2, {Uint{3}})), RevertReason::kTransferFailure);
  EXPECT_EQ(RevertOf(source, Call(0, "give", 2, {Uint{0}})), RevertReason::kTransferFailure);
  EXPECT_EQ(RevertOf(source, Call(0, "give", 2, {Uint{2}})), RevertReason::kNone);
  EXPECT_EQ(RevertOf(source, Call(0, "bump")), RevertReason::kArithmeticOverflow);
  EXPECT_EQ(RevertOf(source, Call(0, "div", 0, {Uint{0}})), RevertReason::kDivisionByZero);
  EXPECT_EQ(RevertOf(source, Call(0, "mod", 0, {Uint{0}})), RevertReason::kDivisionByZero);
  EXPECT_EQ(RevertOf(source, Call(0, "at", 0, {Uint{1}})), RevertReason::kIndexOutOfRange);
  EXPECT_EQ(RevertOf(source, Call(0, "at", 0, {Uint{0}})), RevertReason::kNone);
  EXPECT_EQ(RevertOf(source, Call(0, "roll", 0, {Uint{0}})), RevertReason::kRandomBoundZero);
  EXPECT_EQ(RevertOf(source, Call(0, "check", 0, {Uint{2}})), RevertReason::kRequireFailed);
}

TEST(ExecuteCallTest, UnderflowReverts) {
  EXPECT_EQ(RevertOf("contract U { uint a; function f() { a -= 1; } }", Call(0, "f")),
            RevertReason::kArithmeticOverflow);
  EXPECT_EQ(RevertOf("contract U { uint a; function f() { a = a - 1 + 2; } }", Call(0, "f")),
            RevertReason::kArithmeticOverflow);
}

TEST(ExecuteCallTest, ShortCircuitSkipsRightOperand) {
  // The right operand would divide by zero.
  EXPECT_EQ(RevertOf("contract S { uint a; function f() { require(a == 0 || 1 / a == 1); } }",
                     Call(0, "f")),
            RevertReason::kNone);
  EXPECT_EQ(RevertOf("contract S { uint a; function f() { require(a != 0 && 1 / a == 1); } }",
                     Call(0, "f")),
            RevertReason::kRequireFailed);
}

TEST(ExecuteCallTest, MappingDeleteAndDefaults) {
  ContractModel model = LoadContract("bank");
  WorldState world = InitWorld(model, {});
  ExecuteCall(world, model, Call(1, "deposit", 10));
  EXPECT_EQ(std::get<Mapping>(world.storage.at("deposits")).at(Address(1)), 10);
  CallRecord r = ExecuteCall(world, model, Call(1, "withdraw", 0, {Uint{10}}));
  EXPECT_FALSE(r.reverted);
  // A zero entry is indistinguishable from an absent one.
  EXPECT_TRUE(std::get<Mapping>(world.storage.at("deposits")).empty());
  EXPECT_EQ(world.user_balances[1], 100);
}

TEST(ExecuteCallTest, HardErrorsForMalformedCalls) {
  ContractModel model = LoadContract("bank");
  WorldState world = InitWorld(model, {});
  EXPECT_THROW(ExecuteCall(world, model, Call(0, "nope")), UsageError);
  EXPECT_THROW(ExecuteCall(world, model, Call(3, "deposit", 1)), UsageError);
  EXPECT_THROW(ExecuteCall(world, model, Call(0, "withdraw")), UsageError);
  EXPECT_THROW(ExecuteCall(world, model, Call(0, "withdraw", 0, {Address(1)})),
               UsageError);
}

TEST(ExecuteCallTest, CounterAdvancesOnlyOnSuccess) {
  ContractModel model = LoadContract("lottery");
  WorldState world = InitWorld(model, OwnerConfig(1));
  ExecuteCall(world, model, Call(0, "pickWinner"));
  EXPECT_EQ(world.call_counter, 0u);
  ExecuteCall(world, model, Call(0, "enter", 1));
  ExecuteCall(world, model, Call(1, "pickWinner"));
  EXPECT_EQ(world.call_counter, 2u);
  EXPECT_EQ(world.draw_ordinal, 0u);
}

TEST(ReplayTest, LotteryRoundEmptiesContract) {
  ContractModel model = LoadContract("lottery");
  std::vector<FunctionCall> calls = {Call(0, "enter", 1), Call(2, "enter", 1),
                                     Call(1, "pickWinner")};
  Simulation sim = Replay(model, OwnerConfig(1), calls);
  ASSERT_EQ(sim.records.size(), 3u);
  EXPECT_EQ(sim.records[2].balances_after.contract, 0);
  EXPECT_FALSE(sim.records[2].reverted);
  EXPECT_EQ(sim.records[2].internal_txs.size(), 1u);
  EXPECT_EQ(sim.records[2].internal_txs[0].value, 2);
  EXPECT_EQ(sim.Calls(), calls);
  for (std::size_t i = 0; i < sim.records.size(); ++i) {
    EXPECT_EQ(sim.records[i].index, static_cast<int>(i));
  }
}

TEST(ReplayTest, IsDeterministic) {
  ContractModel model = LoadContract("lottery");
  std::vector<FunctionCall> calls = {Call(0, "enter", 1), Call(2, "enter", 4),
                                     Call(1, "pickWinner"), Call(1, "enter", 2)};
  EXPECT_EQ(Replay(model, OwnerConfig(1), calls), Replay(model, OwnerConfig(1), calls));
}

TEST(ReplayTest, SingleRevertedCallCoversEntryAndFailSite) {
  ContractModel model = LoadContract("lottery");
  std::vector<FunctionCall> calls = {Call(0, "enter", 0)};
  Simulation sim = Replay(model, {}, calls);
  EXPECT_TRUE(sim.records[0].reverted);
  EXPECT_EQ(sim.coverage, (Coverage{0, 2}));
}

TEST(ReplayTest, RejectsEmptySequence) {
  EXPECT_THROW(Replay(LoadContract("lottery"), {}, {}), UsageError);
}

TEST(DrawRandomTest, BoundOneAndZero) {
  WorldState world;
  world.rng_seed = 9;
  for (int i = 0; i < 100; ++i) EXPECT_EQ(DrawRandom(world, 1), Uint{0});
  EXPECT_EQ(DrawRandom(world, 0), std::nullopt);
}

TEST(DrawRandomTest, KeyedBySeedCounterAndOrdinal) {
  WorldState a;
  a.rng_seed = 5;
  a.call_counter = 3;
  WorldState b = a;
  EXPECT_EQ(DrawRandom(a, 1000000), DrawRandom(b, 1000000));
  EXPECT_EQ(a.draw_ordinal, 1u);
  // Different positions disagree for at least one of several draws.
  WorldState c = a;
  c.call_counter = 4;
  c.draw_ordinal = 0;
  WorldState d = a;
  d.draw_ordinal = 0;
  int differing = 0;
  for (int i = 0; i < 8; ++i) {
    differing += DrawRandom(c, 1000000) != DrawRandom(d, 1000000) ? 1 : 0;
  }
  EXPECT_GT(differing, 0);
}

TEST(DrawRandomTest, RoughlyUniformOverFourBuckets) {
  WorldState world;
  world.rng_seed = 42;
  std::array<int, 4> buckets{};
  for (int i = 0; i < 10000; ++i) {
    world.call_counter = static_cast<std::uint64_t>(i / 7);
    world.draw_ordinal = static_cast<std::uint64_t>(i % 7);
    ++buckets[static_cast<std::size_t>(*DrawRandom(world, 4))];
  }
  for (int count : buckets) {
    EXPECT_GE(count, 2375);
    EXPECT_LE(count, 2625);
  }
}

TEST(RecipientTest, ClassifyAndParse) {
  EXPECT_EQ(Classify(Address(2), 3), Recipient::User(2));
  EXPECT_EQ(Classify(Address(3), 3), Recipient::Others());
  EXPECT_EQ(Classify(Address::Zero(), 3), Recipient::Others());
  EXPECT_EQ(Recipient::Parse("others"), Recipient::Others());
  EXPECT_EQ(Recipient::Parse("7"), Recipient::User(7));
  EXPECT_EQ(Recipient::Parse("x"), std::nullopt);
  EXPECT_EQ(Recipient::User(4).ToString(), "4");
}

TEST(RevertReasonTest, NamesRoundTrip) {
  for (RevertReason r :
       {RevertReason::kNone, RevertReason::kNonPayableValue,
        RevertReason::kInsufficientBalance, RevertReason::kRequireFailed,
        RevertReason::kTransferFailure, RevertReason::kArithmeticOverflow,
        RevertReason::kDivisionByZero, RevertReason::kIndexOutOfRange,
        RevertReason::kRandomBoundZero}) {
    EXPECT_EQ(ParseRevertReason(RevertReasonName(r)), r);
  }
  EXPECT_EQ(ParseRevertReason("bogus"), std::nullopt);
}

}  // namespace
}  // namespace contractsim
