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

#include "oracle/fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace contractsim::testing {

std::string ContractPath(std::string_view name) {
  return std::string(CONTRACTSIM_SOURCE_DIR) + "/contracts/" +
         std::string(name) + ".msol";
}

std::string LoadContractSource(std::string_view name) {
  std::ifstream in(ContractPath(name));
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ContractModel LoadContract(std::string_view name) {
  return Parse(LoadContractSource(name));
}

const std::string_view kUnguardedPonziSource = R"(
contract Ponzi {
    address LastAuthor;
    uint OwnerAccount;
    uint Messages;

    function BuyMessage() payable {
        require(msg.value >= 2);
        if (Messages == 0) {
            LastAuthor = owner;
        }
        LastAuthor.transfer(msg.value / 2);
        OwnerAccount += msg.value - msg.value / 2;
        LastAuthor = msg.sender;
        Messages += 1;
    }

    function ownerWithdraw() {
        require(msg.sender == owner);
        owner.transfer(OwnerAccount);
        OwnerAccount = 0;
    }
}
)";

const std::string_view kOverflowCounterSource = R"(
contract Counter {
    uint count = 340282366920938463463374607431768211454;

    function bump() {
        count += 1;
    }
}
)";

const std::string_view kSingleFunctionSource = R"(
contract Tip {
    uint tips;

    function tip() payable {
        tips += msg.value;
    }
}
)";

namespace {

// Emits random MiniSol. Variables: u0 u1 (uint), a0 (address),
// m0 (mapping), arr0 (address[]).
class ContractGenerator {
 public:
  explicit ContractGenerator(Rng& rng) : rng_(rng) {}

  std::string Generate() {
    std::ostringstream out;
    out << "contract R {\n";
    out << "    uint u0";
    if (Coin()) out << " = " << rng_.Below(5);
    out << ";\n    uint u1;\n    address a0";
    if (Coin()) out << " = address(" << PickAddressLiteral() << ")";
    out << ";\n    mapping(address => uint) m0;\n    address[] arr0;\n";
    int functions = 1 + static_cast<int>(rng_.Below(3));
    for (int f = 0; f < functions; ++f) {
      uint_params_.clear();
      address_params_.clear();
      out << "\n    function f" << f << "(";
      int params = static_cast<int>(rng_.Below(3));
      for (int p = 0; p < params; ++p) {
        if (p > 0) out << ", ";
        if (Coin()) {
          std::string name = "p" + std::to_string(p);
          out << "uint " << name;
          uint_params_.push_back(name);
        } else {
          std::string name = "q" + std::to_string(p);
          out << "address " << name;
          address_params_.push_back(name);
        }
      }
      out << ")";
      if (Coin()) out << " payable";
      out << " {\n";
      int statements = 1 + static_cast<int>(rng_.Below(4));
      for (int s = 0; s < statements; ++s) Statement(out, 2, 0);
      out << "    }\n";
    }
    out << "}\n";
    return out.str();
  }

 private:
  bool Coin() { return rng_.Below(2) == 0; }

  std::uint64_t PickAddressLiteral() {
    static constexpr std::uint64_t kChoices[] = {0, 1, 2, 1000};
    return kChoices[rng_.Below(4)];
  }

  static void Indent(std::ostringstream& out, int level) {
    out << std::string(4 * level, ' ');
  }

  void Block(std::ostringstream& out, int level, int depth) {
    out << "{\n";
    int statements = 1 + static_cast<int>(rng_.Below(2));
    for (int s = 0; s < statements; ++s) Statement(out, level + 1, depth + 1);
    Indent(out, level);
    out << "}";
  }

  void Statement(std::ostringstream& out, int level, int depth) {
    Indent(out, level);
    int pick = static_cast<int>(rng_.Below(depth < 2 ? 12 : 10));
    switch (pick) {
      case 0:
        out << "require(" << Condition(0) << ");\n";
        return;
      case 1:
        out << (Coin() ? "u0" : "u1") << " = " << UintExpr(0) << ";\n";
        return;
      case 2:
        out << (Coin() ? "u0" : "u1") << " += " << UintExpr(0) << ";\n";
        return;
      case 3:
        out << (Coin() ? "u0" : "u1") << " -= " << UintExpr(0) << ";\n";
        return;
      case 4:
        out << "m0[" << AddressExpr(0) << "] += " << UintExpr(0) << ";\n";
        return;
      case 5:
        out << "arr0.push(" << AddressExpr(0) << ");\n";
        return;
      case 6:
        out << "a0 = " << AddressExpr(0) << ";\n";
        return;
      case 7:
        out << AddressExpr(0) << ".transfer(" << UintExpr(0) << ");\n";
        return;
      case 8:
        out << (Coin() ? "delete arr0;\n" : "delete m0[msg.sender];\n");
        return;
      case 9:
        out << "require(" << Condition(0) << ");\n";
        return;
      default:
        out << "if (" << Condition(0) << ") ";
        Block(out, level, depth);
        if (Coin()) {
          out << " else ";
          Block(out, level, depth);
        }
        out << "\n";
        return;
    }
  }

  std::string Condition(int depth) {
    int pick = static_cast<int>(rng_.Below(depth < 2 ? 8 : 5));
    static constexpr const char* kCompare[] = {"==", "!=", "<", ">",
                                               "<=", ">="};
    switch (pick) {
      case 0:
      case 1:
      case 2:
        return UintExpr(1) + " " + kCompare[rng_.Below(6)] + " " + UintExpr(1);
      case 3:
        return AddressExpr(1) + (Coin() ? " == " : " != ") + AddressExpr(1);
      case 4:
        return Coin() ? "true" : "false";
      case 5:
        return "!(" + Condition(depth + 1) + ")";
      case 6:
        return "(" + Condition(depth + 1) + " && " + Condition(depth + 1) + ")";
      default:
        return "(" + Condition(depth + 1) + " || " + Condition(depth + 1) + ")";
    }
  }

  std::string UintExpr(int depth) {
    int pick = static_cast<int>(rng_.Below(depth < 2 ? 12 : 9));
    switch (pick) {
      case 0:
        return std::to_string(rng_.Below(4));
      case 1:
        return Coin() ? "u0" : "u1";
      case 2:
        return "msg.value";
      case 3:
        return "this.balance";
      case 4:
        if (!uint_params_.empty()) {
          return uint_params_[rng_.Below(uint_params_.size())];
        }
        return std::to_string(1 + rng_.Below(3));
      case 5:
        return "arr0.length";
      case 6:
        return "m0[" + AddressExpr(depth + 1) + "]";
      case 7:
        return "random(" + std::to_string(rng_.Below(4)) + ")";
      case 8:
        return "340282366920938463463374607431768211455";
      default: {
        static constexpr const char* kOps[] = {"+", "-", "*", "/", "%"};
        return "(" + UintExpr(depth + 1) + " " + kOps[rng_.Below(5)] + " " +
               UintExpr(depth + 1) + ")";
      }
    }
  }

  std::string AddressExpr(int depth) {
    int pick = static_cast<int>(rng_.Below(depth < 2 ? 6 : 5));
    switch (pick) {
      case 0:
        return "msg.sender";
      case 1:
        return "owner";
      case 2:
        return "a0";
      case 3:
        if (!address_params_.empty()) {
          return address_params_[rng_.Below(address_params_.size())];
        }
        return "msg.sender";
      case 4:
        return "address(" + std::to_string(PickAddressLiteral()) + ")";
      default:
        return "arr0[" + UintExpr(depth + 1) + "]";
    }
  }

  Rng& rng_;
  std::vector<std::string> uint_params_;
  std::vector<std::string> address_params_;
};

}  // namespace

std::string RandomContractSource(Rng& rng) {
  return ContractGenerator(rng).Generate();
}

FuzzConfig RandomConfig(Rng& rng) {
  FuzzConfig config;
  config.num_users = 1 + static_cast<int>(rng.Below(4));
  config.owner_index = static_cast<int>(rng.Below(config.num_users));
  config.endowment = 1 + rng.Below(200);
  config.rng_seed = rng.Next();
  config.max_value_per_call = rng.Below(3) == 0 ? config.endowment + 5
                                                : rng.Below(20);
  config.max_sequence_length = 1 + static_cast<int>(rng.Below(8));
  config.max_simulations = 1 + static_cast<int>(rng.Below(6));
  config.iteration_budget = static_cast<int>(rng.Below(20));
  return config;
}

CallSequence RandomSequence(const ContractModel& model,
                            const FuzzConfig& config, Rng& rng,
                            int max_length) {
  CallSequence sequence;
  int length = 1 + static_cast<int>(rng.Below(max_length));
  for (int i = 0; i < length; ++i) {
    sequence.push_back(GenerateCall(model, config, rng));
  }
  return sequence;
}

}  // namespace contractsim::testing
