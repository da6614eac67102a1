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
#include <cctype>

#include "contractsim/minisol.h"

namespace contractsim {

ParseError::ParseError(SourceLocation location, const std::string& message)
    : std::runtime_error(std::to_string(location.line) + ":" +
                         std::to_string(location.column) + ": " + message),
      location_(location),
      message_(message) {}

namespace {

constexpr std::array<std::string_view, 9> kTwoCharSymbols = {
    "==", "!=", "<=", ">=", "&&", "||", "+=", "-=", "=>"};
constexpr std::string_view kOneCharSymbols = "{}()[];,.=<>+-*/%!";

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> Tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (source[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++pos;
    }
  };

  while (pos < source.size()) {
    char c = source[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (source.substr(pos, 2) == "//") {
      while (pos < source.size() && source[pos] != '\n') advance(1);
      continue;
    }

    Token token;
    token.location = {line, column};
    token.offset = pos;
    std::size_t end = pos;
    if (IsIdentStart(c)) {
      while (end < source.size() && IsIdentChar(source[end])) ++end;
      token.kind = TokenKind::kIdentifier;
    } else if (IsDigit(c)) {
      while (end < source.size() && IsDigit(source[end])) ++end;
      if (end < source.size() && IsIdentStart(source[end])) {
        throw ParseError(token.location, "malformed number literal");
      }
      token.kind = TokenKind::kNumber;
    } else {
      token.kind = TokenKind::kSymbol;
      for (std::string_view symbol : kTwoCharSymbols) {
        if (source.substr(pos, 2) == symbol) {
          end = pos + 2;
          break;
        }
      }
      if (end == pos) {
        if (kOneCharSymbols.find(c) == std::string_view::npos) {
          throw ParseError(token.location,
                           "unexpected character '" + std::string(1, c) + "'");
        }
        end = pos + 1;
      }
    }
    token.length = end - pos;
    token.text = std::string(source.substr(pos, token.length));
    advance(token.length);
    tokens.push_back(std::move(token));
  }

  Token eof;
  eof.kind = TokenKind::kEnd;
  eof.location = {line, column};
  eof.offset = source.size();
  tokens.push_back(std::move(eof));
  return tokens;
}

}  // namespace contractsim
