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

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include "contractsim/minisol.h"

namespace contractsim {
namespace {

constexpr std::array<std::string_view, 15> kKeywords = {
    "contract", "function", "payable", "uint",  "address",
    "mapping",  "if",       "else",    "require", "true",
    "false",    "delete",   "msg",     "this",  "random"};

bool IsKeyword(std::string_view text) {
  return std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
}

std::string Quote(std::string_view text) {
  return "'" + std::string(text) + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ContractModel Run() {
    // Pass 1 collects declarations so bodies can reference any member.
    skip_bodies_ = true;
    ContractModel declarations = ParseContract();
    for (const auto& var : declarations.state_vars) {
      vars_.emplace(var.name, var.type);
    }
    pos_ = 0;
    skip_bodies_ = false;
    return ParseContract();
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  bool Check(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind != TokenKind::kEnd && t.kind != TokenKind::kNumber &&
           t.text == text;
  }

  bool Match(std::string_view text) {
    if (!Check(text)) return false;
    ++pos_;
    return true;
  }

  const Token& Advance() {
    const Token& t = Peek();
    if (t.kind != TokenKind::kEnd) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const Token& at, const std::string& message) const {
    throw ParseError(at.location, message);
  }

  [[noreturn]] void FailExpected(std::string_view what) const {
    const Token& t = Peek();
    std::string found =
        t.kind == TokenKind::kEnd ? "end of input" : Quote(t.text);
    Fail(t, "expected " + std::string(what) + ", found " + found);
  }

  const Token& Expect(std::string_view text) {
    if (!Check(text)) FailExpected(Quote(text));
    return Advance();
  }

  const Token& ExpectIdentifier(std::string_view what) {
    const Token& t = Peek();
    if (t.kind != TokenKind::kIdentifier) FailExpected(what);
    if (IsKeyword(t.text)) {
      Fail(t, "reserved word " + Quote(t.text) + " cannot be used as " +
                  std::string(what));
    }
    return Advance();
  }

  const Token& ExpectNumber() {
    if (Peek().kind != TokenKind::kNumber) FailExpected("number");
    return Advance();
  }

  Uint NumberValue(const Token& t) const {
    auto value = ParseUint(t.text);
    if (!value) Fail(t, "integer literal exceeds the uint range");
    return *value;
  }

  Address AddressLiteral(const Token& t) const {
    Uint raw = NumberValue(t);
    if (raw > kMaxAddressLiteral) Fail(t, "address literal out of range");
    return Address(static_cast<std::uint64_t>(raw));
  }

  // ---- declarations ------------------------------------------------------

  ContractModel ParseContract() {
    ContractModel model;
    Expect("contract");
    model.name = ExpectIdentifier("contract name").text;
    Expect("{");

    StateVarDecl owner;
    owner.name = std::string(kOwnerVar);
    owner.type = VarType::kAddress;
    owner.implicit = true;
    model.state_vars.push_back(owner);

    std::set<std::string> names = {owner.name};
    while (!Check("}")) {
      if (Peek().kind == TokenKind::kEnd) FailExpected("'}'");
      const Token& start = Peek();
      std::string name;
      if (Check("function")) {
        model.functions.push_back(ParseFunction());
        name = model.functions.back().name;
      } else if (Check("uint") || Check("address") || Check("mapping")) {
        model.state_vars.push_back(ParseStateVar());
        name = model.state_vars.back().name;
      } else {
        FailExpected("state variable or function declaration");
      }
      if (!names.insert(name).second) {
        Fail(start, "duplicate declaration of " + Quote(name));
      }
    }
    Expect("}");
    if (Peek().kind != TokenKind::kEnd) FailExpected("end of input");
    if (skip_bodies_) return model;
    return AssignBranchSites(std::move(model));
  }

  StateVarDecl ParseStateVar() {
    StateVarDecl var;
    var.location = Peek().location;
    if (Match("uint")) {
      var.type = VarType::kUint;
    } else if (Match("mapping")) {
      Expect("(");
      Expect("address");
      Expect("=>");
      Expect("uint");
      Expect(")");
      var.type = VarType::kMapping;
    } else {
      Expect("address");
      if (Match("[")) {
        Expect("]");
        var.type = VarType::kAddressArray;
      } else {
        var.type = VarType::kAddress;
      }
    }
    var.name = ExpectIdentifier("variable name").text;
    if (Check("=")) {
      const Token& eq = Advance();
      if (var.type == VarType::kUint) {
        var.initializer = NumberValue(ExpectNumber());
      } else if (var.type == VarType::kAddress) {
        Expect("address");
        Expect("(");
        var.initializer = AddressLiteral(ExpectNumber());
        Expect(")");
      } else {
        Fail(eq, "only uint and address variables may have initializers");
      }
    }
    Expect(";");
    return var;
  }

  FunctionDecl ParseFunction() {
    FunctionDecl fn;
    Expect("function");
    const Token& name = ExpectIdentifier("function name");
    fn.name = name.text;
    fn.location = name.location;
    Expect("(");
    std::set<std::string> param_names;
    if (!Check(")")) {
      do {
        const Token& type_token = Peek();
        Param param;
        if (Match("uint")) {
          param.type = ValueType::kUint;
        } else if (Match("address")) {
          param.type = ValueType::kAddress;
        } else {
          FailExpected("parameter type 'uint' or 'address'");
        }
        const Token& pname = ExpectIdentifier("parameter name");
        param.name = pname.text;
        if (!param_names.insert(param.name).second) {
          Fail(pname, "duplicate parameter " + Quote(param.name));
        }
        if (!skip_bodies_ && vars_.count(param.name)) {
          Fail(pname, "parameter " + Quote(param.name) +
                          " shadows a state variable");
        }
        (void)type_token;
        fn.params.push_back(std::move(param));
      } while (Match(","));
    }
    Expect(")");
    fn.payable = Match("payable");

    if (skip_bodies_) {
      SkipBlock();
      return fn;
    }
    params_.clear();
    for (const auto& p : fn.params) params_.emplace(p.name, p.type);
    fn.body = ParseBlock();
    params_.clear();
    return fn;
  }

  void SkipBlock() {
    Expect("{");
    int depth = 1;
    while (depth > 0) {
      const Token& t = Peek();
      if (t.kind == TokenKind::kEnd) FailExpected("'}'");
      if (t.kind == TokenKind::kSymbol) {
        if (t.text == "{") ++depth;
        if (t.text == "}") --depth;
      }
      Advance();
    }
  }

  // ---- statements --------------------------------------------------------

  std::vector<Stmt> ParseBlock() {
    Expect("{");
    std::vector<Stmt> body;
    while (!Check("}")) {
      if (Peek().kind == TokenKind::kEnd) FailExpected("'}'");
      body.push_back(ParseStatement());
    }
    Expect("}");
    return body;
  }

  Stmt ParseStatement() {
    Stmt stmt;
    const Token& start = Peek();
    stmt.location = start.location;

    if (Match("require")) {
      stmt.kind = StmtKind::kRequire;
      Expect("(");
      stmt.value = ParseCondition("require condition");
      Expect(")");
      Expect(";");
      return stmt;
    }
    if (Match("if")) {
      stmt.kind = StmtKind::kIf;
      Expect("(");
      stmt.value = ParseCondition("if condition");
      Expect(")");
      stmt.then_body = ParseBlock();
      if (Match("else")) {
        stmt.has_else = true;
        stmt.else_body = ParseBlock();
      }
      return stmt;
    }
    if (Match("delete")) {
      stmt.kind = StmtKind::kDelete;
      const Token& name = Peek();
      auto it = name.kind == TokenKind::kIdentifier ? vars_.find(name.text)
                                                    : vars_.end();
      if (it != vars_.end() && !IsValueType(it->second) && !Check("[", 1)) {
        Advance();
        stmt.var = name.text;
      } else {
        stmt.target = ParseLvalue();
      }
      Expect(";");
      return stmt;
    }

    // arr.push(x);
    if (start.kind == TokenKind::kIdentifier && Check(".", 1) &&
        Check("push", 2)) {
      auto it = vars_.find(start.text);
      if (it == vars_.end() || it->second != VarType::kAddressArray) {
        Fail(start, Quote(start.text) + " is not an address array");
      }
      Advance();
      Advance();
      Advance();
      stmt.kind = StmtKind::kPush;
      stmt.var = start.text;
      Expect("(");
      stmt.value = ParseTyped(ValueType::kAddress, "pushed element");
      Expect(")");
      Expect(";");
      return stmt;
    }

    ExprPtr head = ParsePrimary();
    if (Check(".") && Check("transfer", 1)) {
      if (head->type != ValueType::kAddress) {
        Fail(start, "transfer recipient must be an address");
      }
      Advance();
      Advance();
      stmt.kind = StmtKind::kTransfer;
      stmt.target = head;
      Expect("(");
      const Token& amount = Peek();
      stmt.value = ParseExpr();
      if (stmt.value->type != ValueType::kUint) {
        Fail(amount, "transfer amount must be uint, found " +
                         std::string(TypeName(stmt.value->type)));
      }
      Expect(")");
      Expect(";");
      return stmt;
    }

    const Token& op = Peek();
    if (Check("=") || Check("+=") || Check("-=")) {
      CheckLvalue(start, head);
      Advance();
      stmt.kind = StmtKind::kAssign;
      stmt.target = head;
      stmt.assign_op = op.text == "=" ? AssignOp::kSet
                       : op.text == "+=" ? AssignOp::kAdd
                                         : AssignOp::kSub;
      if (stmt.assign_op != AssignOp::kSet &&
          head->type != ValueType::kUint) {
        Fail(op, Quote(op.text) + " requires a uint target");
      }
      stmt.value = ParseTyped(head->type, "assigned value");
      Expect(";");
      return stmt;
    }
    FailExpected("assignment or call statement");
  }

  void CheckLvalue(const Token& at, const ExprPtr& expr) const {
    if (expr->kind == ExprKind::kStateVar || expr->kind == ExprKind::kIndex) {
      return;
    }
    if (expr->kind == ExprKind::kParam) {
      Fail(at, "parameter " + Quote(expr->name) + " is read-only");
    }
    Fail(at, "expression is not assignable");
  }

  ExprPtr ParseLvalue() {
    const Token& start = Peek();
    ExprPtr expr = ParsePrimary();
    CheckLvalue(start, expr);
    return expr;
  }

  // ---- expressions -------------------------------------------------------

  ExprPtr ParseCondition(std::string_view what) {
    return ParseTyped(ValueType::kBool, what);
  }

  ExprPtr ParseTyped(ValueType expected, std::string_view what) {
    const Token& start = Peek();
    ExprPtr expr = ParseExpr();
    if (expr->type != expected) {
      Fail(start, std::string(what) + " must be " +
                      std::string(TypeName(expected)) + ", found " +
                      std::string(TypeName(expr->type)));
    }
    return expr;
  }

  ExprPtr ParseExpr() { return ParseOr(); }

  ExprPtr MakeBinary(const Token& op_token, BinaryOp op, ExprPtr lhs,
                     ExprPtr rhs) const {
    auto expr = std::make_shared<Expr>();
    expr->kind = ExprKind::kBinary;
    expr->location = op_token.location;
    expr->op = op;
    auto mismatch = [&](std::string_view need) {
      Fail(op_token, "operator " + Quote(op_token.text) + " requires " +
                         std::string(need) + " operands, found " +
                         std::string(TypeName(lhs->type)) + " and " +
                         std::string(TypeName(rhs->type)));
    };
    switch (op) {
      case BinaryOp::kAdd:
      case BinaryOp::kSub:
      case BinaryOp::kMul:
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (lhs->type != ValueType::kUint || rhs->type != ValueType::kUint) {
          mismatch("uint");
        }
        expr->type = ValueType::kUint;
        break;
      case BinaryOp::kLt:
      case BinaryOp::kGt:
      case BinaryOp::kLe:
      case BinaryOp::kGe:
        if (lhs->type != ValueType::kUint || rhs->type != ValueType::kUint) {
          mismatch("uint");
        }
        expr->type = ValueType::kBool;
        break;
      case BinaryOp::kEq:
      case BinaryOp::kNe:
        if (lhs->type != rhs->type) mismatch("same-typed");
        expr->type = ValueType::kBool;
        break;
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        if (lhs->type != ValueType::kBool || rhs->type != ValueType::kBool) {
          mismatch("bool");
        }
        expr->type = ValueType::kBool;
        break;
    }
    expr->operands = {std::move(lhs), std::move(rhs)};
    return expr;
  }

  template <typename Next>
  ExprPtr ParseLeftAssoc(
      std::initializer_list<std::pair<std::string_view, BinaryOp>> ops,
      Next next) {
    ExprPtr lhs = (this->*next)();
    for (;;) {
      bool matched = false;
      for (const auto& [symbol, op] : ops) {
        if (Check(symbol)) {
          const Token& op_token = Advance();
          ExprPtr rhs = (this->*next)();
          lhs = MakeBinary(op_token, op, std::move(lhs), std::move(rhs));
          matched = true;
          break;
        }
      }
      if (!matched) return lhs;
    }
  }

  ExprPtr ParseOr() {
    return ParseLeftAssoc({{"||", BinaryOp::kOr}}, &Parser::ParseAnd);
  }
  ExprPtr ParseAnd() {
    return ParseLeftAssoc({{"&&", BinaryOp::kAnd}}, &Parser::ParseEquality);
  }
  ExprPtr ParseEquality() {
    return ParseLeftAssoc({{"==", BinaryOp::kEq}, {"!=", BinaryOp::kNe}},
                          &Parser::ParseRelational);
  }
  ExprPtr ParseRelational() {
    return ParseLeftAssoc({{"<=", BinaryOp::kLe},
                           {">=", BinaryOp::kGe},
                           {"<", BinaryOp::kLt},
                           {">", BinaryOp::kGt}},
                          &Parser::ParseAdditive);
  }
  ExprPtr ParseAdditive() {
    return ParseLeftAssoc({{"+", BinaryOp::kAdd}, {"-", BinaryOp::kSub}},
                          &Parser::ParseMultiplicative);
  }
  ExprPtr ParseMultiplicative() {
    return ParseLeftAssoc({{"*", BinaryOp::kMul},
                           {"/", BinaryOp::kDiv},
                           {"%", BinaryOp::kMod}},
                          &Parser::ParseUnary);
  }

  ExprPtr ParseUnary() {
    if (Check("!")) {
      const Token& bang = Advance();
      ExprPtr operand = ParseUnary();
      if (operand->type != ValueType::kBool) {
        Fail(bang, "operator '!' requires a bool operand");
      }
      auto expr = std::make_shared<Expr>();
      expr->kind = ExprKind::kNot;
      expr->location = bang.location;
      expr->type = ValueType::kBool;
      expr->operands = {std::move(operand)};
      return expr;
    }
    return ParsePrimary();
  }

  ExprPtr ParsePrimary() {
    const Token& t = Peek();
    auto expr = std::make_shared<Expr>();
    expr->location = t.location;

    if (t.kind == TokenKind::kNumber) {
      Advance();
      expr->kind = ExprKind::kLiteral;
      expr->type = ValueType::kUint;
      expr->literal = NumberValue(t);
      return expr;
    }
    if (Match("(")) {
      ExprPtr inner = ParseExpr();
      Expect(")");
      return inner;
    }
    if (Match("true") || Match("false")) {
      expr->kind = ExprKind::kLiteral;
      expr->type = ValueType::kBool;
      expr->literal = t.text == "true";
      return expr;
    }
    if (Match("address")) {
      Expect("(");
      expr->kind = ExprKind::kLiteral;
      expr->type = ValueType::kAddress;
      expr->literal = AddressLiteral(ExpectNumber());
      Expect(")");
      return expr;
    }
    if (Match("msg")) {
      Expect(".");
      if (Match("sender")) {
        expr->kind = ExprKind::kMsgSender;
        expr->type = ValueType::kAddress;
      } else if (Match("value")) {
        expr->kind = ExprKind::kMsgValue;
        expr->type = ValueType::kUint;
      } else {
        FailExpected("'sender' or 'value'");
      }
      return expr;
    }
    if (Match("this")) {
      Expect(".");
      Expect("balance");
      expr->kind = ExprKind::kThisBalance;
      expr->type = ValueType::kUint;
      return expr;
    }
    if (Match("random")) {
      Expect("(");
      expr->kind = ExprKind::kRandom;
      expr->type = ValueType::kUint;
      expr->operands = {ParseTyped(ValueType::kUint, "random bound")};
      Expect(")");
      return expr;
    }
    if (t.kind != TokenKind::kIdentifier || IsKeyword(t.text)) {
      FailExpected("expression");
    }

    Advance();
    expr->name = t.text;
    if (auto p = params_.find(t.text); p != params_.end()) {
      expr->kind = ExprKind::kParam;
      expr->type = p->second;
      return expr;
    }
    auto v = vars_.find(t.text);
    if (v == vars_.end()) Fail(t, "unknown identifier " + Quote(t.text));

    switch (v->second) {
      case VarType::kUint:
      case VarType::kAddress:
        if (Check("[")) Fail(Peek(), "cannot index non-array " + Quote(t.text));
        if (Check(".") && Check("length", 1)) {
          Fail(Peek(), Quote(t.text) + " has no length");
        }
        expr->kind = ExprKind::kStateVar;
        expr->type = v->second == VarType::kUint ? ValueType::kUint
                                                 : ValueType::kAddress;
        return expr;
      case VarType::kMapping:
        if (!Check("[")) {
          Fail(t, "mapping " + Quote(t.text) + " must be indexed");
        }
        Advance();
        expr->kind = ExprKind::kIndex;
        expr->type = ValueType::kUint;
        expr->operands = {ParseTyped(ValueType::kAddress, "mapping key")};
        Expect("]");
        return expr;
      case VarType::kAddressArray:
        if (Match("[")) {
          expr->kind = ExprKind::kIndex;
          expr->type = ValueType::kAddress;
          expr->operands = {ParseTyped(ValueType::kUint, "array index")};
          Expect("]");
          return expr;
        }
        if (Check(".") && Check("length", 1)) {
          Advance();
          Advance();
          expr->kind = ExprKind::kLength;
          expr->type = ValueType::kUint;
          return expr;
        }
        Fail(t, "array " + Quote(t.text) +
                    " must be indexed or used with .length");
    }
    Fail(t, "unsupported variable");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool skip_bodies_ = false;
  std::map<std::string, VarType, std::less<>> vars_;
  std::map<std::string, ValueType, std::less<>> params_;
};

}  // namespace

ContractModel Parse(std::string_view source) {
  Parser parser(Tokenize(source));
  return parser.Run();
}

}  // namespace contractsim
