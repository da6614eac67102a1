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

// 128-bit currency and integer arithmetic shared by every module.

#ifndef CONTRACTSIM_UINT128_H_
#define CONTRACTSIM_UINT128_H_

#include <optional>
#include <string>
#include <string_view>

namespace contractsim {

using Uint = unsigned __int128;
using Int = __int128;

inline constexpr Uint kUintMax = ~Uint{0};

// Checked operations; std::nullopt on overflow, underflow or division by zero.
std::optional<Uint> CheckedAdd(Uint a, Uint b);
std::optional<Uint> CheckedSub(Uint a, Uint b);
std::optional<Uint> CheckedMul(Uint a, Uint b);

std::string ToString(Uint value);
std::string ToString(Int value);

// Parses a non-empty run of decimal digits; std::nullopt if malformed or
// larger than kUintMax.
std::optional<Uint> ParseUint(std::string_view text);
// Accepts an optional leading '-'.
std::optional<Int> ParseInt(std::string_view text);

// A signed quantity whose magnitude may use the full uint range, e.g. the
// difference between two uint state-variable values.
struct SignedAmount {
  bool negative = false;
  Uint magnitude = 0;

  static SignedAmount Difference(Uint new_value, Uint old_value);

  std::string ToString() const;
  static std::optional<SignedAmount> Parse(std::string_view text);

  friend bool operator==(const SignedAmount&, const SignedAmount&) = default;
};

}  // namespace contractsim

#endif  // CONTRACTSIM_UINT128_H_
