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

// MiniSol frontend: lexer, recursive-descent parser with semantic checks,
// branch-site instrumentation and a canonical pretty printer.
//
// The grammar is documented in docs/minisol.md. A parsed ContractModel is
// immutable in practice: expressions are shared, statements are values.

#ifndef CONTRACTSIM_MINISOL_H_
#define CONTRACTSIM_MINISOL_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contractsim/value.h"

namespace contractsim {

struct SourceLocation {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

// Lexical, syntactic or semantic fault. what() is "line:column: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation location, const std::string& message);

  SourceLocation location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  SourceLocation location_;
  std::string message_;
};

enum class TokenKind { kIdentifier, kNumber, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceLocation location;
  // Byte range in the source text.
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Splits source into tokens, skipping whitespace and `//` comments. The
// returned vector always ends with a kEnd token.
std::vector<Token> Tokenize(std::string_view source);

enum class VarType { kUint, kAddress, kMapping, kAddressArray };

std::string_view VarTypeName(VarType type);
bool IsValueType(VarType type);

struct StateVarDecl {
  std::string name;
  VarType type = VarType::kUint;
  std::optional<Value> initializer;
  SourceLocation location;
  // True only for the auto-declared `owner`.
  bool implicit = false;
};

struct Param {
  std::string name;
  ValueType type = ValueType::kUint;
};

enum class ExprKind {
  kLiteral,
  kStateVar,     // uint or address state variable
  kParam,
  kMsgSender,
  kMsgValue,
  kThisBalance,
  kRandom,       // random(operands[0])
  kIndex,        // name[operands[0]], name is a mapping or array variable
  kLength,       // name.length
  kNot,          // !operands[0]
  kBinary,
};

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kEq, kNe, kLt, kGt, kLe, kGe,
  kAnd, kOr,
};

std::string_view BinaryOpSymbol(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::kLiteral;
  SourceLocation location;
  ValueType type = ValueType::kUint;
  BinaryOp op = BinaryOp::kAdd;
  std::string name;
  Value literal = Uint{0};
  std::vector<ExprPtr> operands;
};

enum class StmtKind { kRequire, kIf, kAssign, kTransfer, kPush, kDelete };
enum class AssignOp { kSet, kAdd, kSub };

struct Stmt {
  StmtKind kind = StmtKind::kRequire;
  SourceLocation location;
  // kAssign/kDelete: the lvalue (kStateVar or kIndex). kTransfer: recipient.
  ExprPtr target;
  // kRequire/kIf: condition. kAssign: right-hand side. kTransfer: amount.
  // kPush: pushed element.
  ExprPtr value;
  AssignOp assign_op = AssignOp::kSet;
  // kPush: array name. kDelete of a whole mapping/array: its name.
  std::string var;
  std::vector<Stmt> then_body;
  std::vector<Stmt> else_body;
  bool has_else = false;
  // First of the two branch sites owned by an `if` (then, else) or a
  // `require` (pass, fail); -1 until AssignBranchSites runs.
  int first_site = -1;
};

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  bool payable = false;
  std::vector<Stmt> body;
  SourceLocation location;
  int entry_site = -1;
};

enum class SiteKind { kEntry, kIfThen, kIfElse, kRequirePass, kRequireFail };

std::string_view SiteKindName(SiteKind kind);
std::optional<SiteKind> ParseSiteKind(std::string_view name);

struct BranchSite {
  int id = 0;
  std::string function;
  SiteKind kind = SiteKind::kEntry;
  SourceLocation location;

  friend bool operator==(const BranchSite&, const BranchSite&) = default;
};

struct ContractModel {
  std::string name;
  std::vector<StateVarDecl> state_vars;
  std::vector<FunctionDecl> functions;
  std::vector<BranchSite> branch_sites;

  const FunctionDecl* FindFunction(std::string_view function_name) const;
  const StateVarDecl* FindStateVar(std::string_view var_name) const;
};

// Name of the implicit owner variable present in every model.
inline constexpr std::string_view kOwnerVar = "owner";

// Parses and validates a contract and assigns its branch sites. Throws
// ParseError. Deterministic: equal text yields equal models.
ContractModel Parse(std::string_view source);

struct FunctionSignature {
  std::string name;
  std::vector<ValueType> params;
  bool payable = false;

  friend bool operator==(const FunctionSignature&,
                         const FunctionSignature&) = default;
};

std::vector<FunctionSignature> ExtractInterface(const ContractModel& model);

// (Re)numbers branch sites in source order: per function its entry site,
// then every if (then, else) and require (pass, fail) in a pre-order walk.
ContractModel AssignBranchSites(ContractModel model);

// Canonical source text; Parse(PrettyPrint(m)) is structurally equal to m.
std::string PrettyPrint(const ContractModel& model);

// Equality of everything but source locations.
bool StructurallyEqual(const ContractModel& a, const ContractModel& b);

}  // namespace contractsim

#endif  // CONTRACTSIM_MINISOL_H_
