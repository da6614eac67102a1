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

#include "contractsim/value.h"

namespace contractsim {

std::string Address::ToString() const {
  if (is_zero()) return "zero";
  return std::to_string(raw_);
}

std::optional<Address> Address::Parse(std::string_view text) {
  if (text == "zero") return Zero();
  auto raw = ParseUint(text);
  if (!raw || *raw > kMaxAddressLiteral) return std::nullopt;
  return Address(static_cast<std::uint64_t>(*raw));
}

ValueType TypeOf(const Value& value) {
  switch (value.index()) {
    case 0:
      return ValueType::kUint;
    case 1:
      return ValueType::kAddress;
    default:
      return ValueType::kBool;
  }
}

std::string_view TypeName(ValueType type) {
  switch (type) {
    case ValueType::kUint:
      return "uint";
    case ValueType::kAddress:
      return "address";
    case ValueType::kBool:
      return "bool";
  }
  return "?";
}

std::optional<ValueType> ParseValueType(std::string_view name) {
  if (name == "uint") return ValueType::kUint;
  if (name == "address") return ValueType::kAddress;
  if (name == "bool") return ValueType::kBool;
  return std::nullopt;
}

Value ZeroValue(ValueType type) {
  switch (type) {
    case ValueType::kUint:
      return Uint{0};
    case ValueType::kAddress:
      return Address::Zero();
    case ValueType::kBool:
      return false;
  }
  return Uint{0};
}

std::string ValueToString(const Value& value) {
  if (const auto* u = std::get_if<Uint>(&value)) return ToString(*u);
  if (const auto* a = std::get_if<Address>(&value)) return a->ToString();
  return std::get<bool>(value) ? "true" : "false";
}

std::optional<Value> ParseValue(ValueType type, std::string_view text) {
  switch (type) {
    case ValueType::kUint:
      if (auto u = ParseUint(text)) return Value(*u);
      return std::nullopt;
    case ValueType::kAddress:
      if (auto a = Address::Parse(text)) return Value(*a);
      return std::nullopt;
    case ValueType::kBool:
      if (text == "true") return Value(true);
      if (text == "false") return Value(false);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace contractsim
