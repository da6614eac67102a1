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

#include <sstream>

#include "contractsim/minisol.h"

namespace contractsim {
namespace {

// Binding strength; higher binds tighter.
int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 3;
    case BinaryOp::kLt:
    case BinaryOp::kGt:
    case BinaryOp::kLe:
    case BinaryOp::kGe: return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 6;
  }
  return 0;
}

constexpr int kUnaryPrecedence = 7;

std::string LiteralText(const Value& v) {
  if (const auto* a = std::get_if<Address>(&v)) {
    return "address(" + std::to_string(a->raw()) + ")";
  }
  return ValueToString(v);
}

std::string Print(const Expr& e, int context = 0) {
  switch (e.kind) {
    case ExprKind::kLiteral:
      return LiteralText(e.literal);
    case ExprKind::kStateVar:
    case ExprKind::kParam:
      return e.name;
    case ExprKind::kMsgSender:
      return "msg.sender";
    case ExprKind::kMsgValue:
      return "msg.value";
    case ExprKind::kThisBalance:
      return "this.balance";
    case ExprKind::kRandom:
      return "random(" + Print(*e.operands[0]) + ")";
    case ExprKind::kIndex:
      return e.name + "[" + Print(*e.operands[0]) + "]";
    case ExprKind::kLength:
      return e.name + ".length";
    case ExprKind::kNot:
      return "!" + Print(*e.operands[0], kUnaryPrecedence);
    case ExprKind::kBinary: {
      int p = Precedence(e.op);
      // Left-associative: the right operand needs parens at equal strength.
      std::string text = Print(*e.operands[0], p) + " " +
                         std::string(BinaryOpSymbol(e.op)) + " " +
                         Print(*e.operands[1], p + 1);
      return p < context ? "(" + text + ")" : text;
    }
  }
  return "";
}

void PrintBlock(std::ostringstream& out, const std::vector<Stmt>& body,
                int indent);

void PrintStmt(std::ostringstream& out, const Stmt& s, int indent) {
  std::string pad(indent * 4, ' ');
  switch (s.kind) {
    case StmtKind::kRequire:
      out << pad << "require(" << Print(*s.value) << ");\n";
      break;
    case StmtKind::kIf:
      out << pad << "if (" << Print(*s.value) << ") {\n";
      PrintBlock(out, s.then_body, indent + 1);
      out << pad << "}";
      if (s.has_else) {
        out << " else {\n";
        PrintBlock(out, s.else_body, indent + 1);
        out << pad << "}";
      }
      out << "\n";
      break;
    case StmtKind::kAssign: {
      std::string_view op = s.assign_op == AssignOp::kSet   ? "="
                            : s.assign_op == AssignOp::kAdd ? "+="
                                                            : "-=";
      out << pad << Print(*s.target) << " " << op << " " << Print(*s.value)
          << ";\n";
      break;
    }
    case StmtKind::kTransfer:
      out << pad << Print(*s.target, kUnaryPrecedence) << ".transfer("
          << Print(*s.value) << ");\n";
      break;
    case StmtKind::kPush:
      out << pad << s.var << ".push(" << Print(*s.value) << ");\n";
      break;
    case StmtKind::kDelete:
      out << pad << "delete " << (s.target ? Print(*s.target) : s.var)
          << ";\n";
      break;
  }
}

void PrintBlock(std::ostringstream& out, const std::vector<Stmt>& body,
                int indent) {
  for (const Stmt& s : body) PrintStmt(out, s, indent);
}

}  // namespace

std::string PrettyPrint(const ContractModel& model) {
  std::ostringstream out;
  out << "contract " << model.name << " {\n";
  for (const auto& var : model.state_vars) {
    if (var.implicit) continue;
    out << "    " << VarTypeName(var.type) << " " << var.name;
    if (var.initializer) out << " = " << LiteralText(*var.initializer);
    out << ";\n";
  }
  for (const auto& fn : model.functions) {
    out << "\n    function " << fn.name << "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i) out << ", ";
      out << TypeName(fn.params[i].type) << " " << fn.params[i].name;
    }
    out << ")" << (fn.payable ? " payable" : "") << " {\n";
    PrintBlock(out, fn.body, 2);
    out << "    }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace contractsim
