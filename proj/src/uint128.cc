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

#include "contractsim/uint128.h"

#include <algorithm>

namespace contractsim {

std::optional<Uint> CheckedAdd(Uint a, Uint b) {
  Uint out;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<Uint> CheckedSub(Uint a, Uint b) {
  if (b > a) return std::nullopt;
  return a - b;
}

std::optional<Uint> CheckedMul(Uint a, Uint b) {
  Uint out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::string ToString(Uint value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string ToString(Int value) {
  if (value >= 0) return ToString(static_cast<Uint>(value));
  // Negating INT128_MIN overflows; go through the unsigned representation.
  return "-" + ToString(Uint{0} - static_cast<Uint>(value));
}

std::optional<Uint> ParseUint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  Uint value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    auto scaled = CheckedMul(value, 10);
    if (!scaled) return std::nullopt;
    auto next = CheckedAdd(*scaled, static_cast<Uint>(c - '0'));
    if (!next) return std::nullopt;
    value = *next;
  }
  return value;
}

std::optional<Int> ParseInt(std::string_view text) {
  bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  auto magnitude = ParseUint(text);
  if (!magnitude) return std::nullopt;
  constexpr Uint kIntMax = kUintMax >> 1;
  if (negative) {
    if (*magnitude > kIntMax + 1) return std::nullopt;
    return static_cast<Int>(Uint{0} - *magnitude);
  }
  if (*magnitude > kIntMax) return std::nullopt;
  return static_cast<Int>(*magnitude);
}

SignedAmount SignedAmount::Difference(Uint new_value, Uint old_value) {
  if (new_value >= old_value) return {false, new_value - old_value};
  return {true, old_value - new_value};
}

std::string SignedAmount::ToString() const {
  std::string digits = contractsim::ToString(magnitude);
  return negative && magnitude != 0 ? "-" + digits : digits;
}

std::optional<SignedAmount> SignedAmount::Parse(std::string_view text) {
  bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  auto magnitude = ParseUint(text);
  if (!magnitude) return std::nullopt;
  return SignedAmount{negative && *magnitude != 0, *magnitude};
}

}  // namespace contractsim
