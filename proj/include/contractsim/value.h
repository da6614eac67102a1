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

// Scalar values manipulated by MiniSol programs.

#ifndef CONTRACTSIM_VALUE_H_
#define CONTRACTSIM_VALUE_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "contractsim/uint128.h"

namespace contractsim {

// Simulated users occupy raw addresses 0..num_users-1. Any other raw value
// (address literals, the zero address) lies outside the simulated user set.
class Address {
 public:
  constexpr Address() = default;
  constexpr explicit Address(std::uint64_t raw) : raw_(raw) {}

  static constexpr Address Zero() {
    return Address(std::numeric_limits<std::uint64_t>::max());
  }

  constexpr std::uint64_t raw() const { return raw_; }
  constexpr bool is_zero() const { return *this == Zero(); }

  // "zero" for the zero address, otherwise the decimal raw value.
  std::string ToString() const;
  static std::optional<Address> Parse(std::string_view text);

  friend constexpr auto operator<=>(const Address&, const Address&) = default;

 private:
  std::uint64_t raw_ = std::numeric_limits<std::uint64_t>::max();
};

// Largest raw value accepted in an `address(N)` literal.
inline constexpr std::uint64_t kMaxAddressLiteral = (1ULL << 62) - 1;

enum class ValueType { kUint, kAddress, kBool };

using Value = std::variant<Uint, Address, bool>;

ValueType TypeOf(const Value& value);
std::string_view TypeName(ValueType type);
std::optional<ValueType> ParseValueType(std::string_view name);

// Default value of a type: 0, the zero address, false.
Value ZeroValue(ValueType type);

// Decimal for uint, Address::ToString for address, "true"/"false".
std::string ValueToString(const Value& value);
std::optional<Value> ParseValue(ValueType type, std::string_view text);

}  // namespace contractsim

#endif  // CONTRACTSIM_VALUE_H_
