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

#include "contractsim/minisol.h"

namespace contractsim {

std::string_view VarTypeName(VarType type) {
  switch (type) {
    case VarType::kUint:
      return "uint";
    case VarType::kAddress:
      return "address";
    case VarType::kMapping:
      return "mapping(address => uint)";
    case VarType::kAddressArray:
      return "address[]";
  }
  return "?";
}

bool IsValueType(VarType type) {
  return type == VarType::kUint || type == VarType::kAddress;
}

std::string_view BinaryOpSymbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view SiteKindName(SiteKind kind) {
  switch (kind) {
    case SiteKind::kEntry: return "entry";
    case SiteKind::kIfThen: return "if_then";
    case SiteKind::kIfElse: return "if_else";
    case SiteKind::kRequirePass: return "require_pass";
    case SiteKind::kRequireFail: return "require_fail";
  }
  return "?";
}

std::optional<SiteKind> ParseSiteKind(std::string_view name) {
  for (SiteKind kind : {SiteKind::kEntry, SiteKind::kIfThen, SiteKind::kIfElse,
                        SiteKind::kRequirePass, SiteKind::kRequireFail}) {
    if (SiteKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

const FunctionDecl* ContractModel::FindFunction(
    std::string_view function_name) const {
  auto it = std::find_if(functions.begin(), functions.end(),
                         [&](const auto& f) { return f.name == function_name; });
  return it == functions.end() ? nullptr : &*it;
}

const StateVarDecl* ContractModel::FindStateVar(std::string_view var_name) const {
  auto it = std::find_if(state_vars.begin(), state_vars.end(),
                         [&](const auto& v) { return v.name == var_name; });
  return it == state_vars.end() ? nullptr : &*it;
}

std::vector<FunctionSignature> ExtractInterface(const ContractModel& model) {
  std::vector<FunctionSignature> out;
  out.reserve(model.functions.size());
  for (const auto& fn : model.functions) {
    FunctionSignature sig{fn.name, {}, fn.payable};
    for (const auto& p : fn.params) sig.params.push_back(p.type);
    out.push_back(std::move(sig));
  }
  return out;
}

namespace {

void NumberBlock(std::vector<Stmt>& body, const std::string& function,
                 std::vector<BranchSite>& sites) {
  auto add = [&](SiteKind kind, SourceLocation location) {
    int id = static_cast<int>(sites.size());
    sites.push_back({id, function, kind, location});
    return id;
  };
  for (Stmt& stmt : body) {
    if (stmt.kind == StmtKind::kRequire) {
      stmt.first_site = add(SiteKind::kRequirePass, stmt.location);
      add(SiteKind::kRequireFail, stmt.location);
    } else if (stmt.kind == StmtKind::kIf) {
      stmt.first_site = add(SiteKind::kIfThen, stmt.location);
      add(SiteKind::kIfElse, stmt.location);
      NumberBlock(stmt.then_body, function, sites);
      NumberBlock(stmt.else_body, function, sites);
    }
  }
}

}  // namespace

ContractModel AssignBranchSites(ContractModel model) {
  model.branch_sites.clear();
  for (FunctionDecl& fn : model.functions) {
    fn.entry_site = static_cast<int>(model.branch_sites.size());
    model.branch_sites.push_back(
        {fn.entry_site, fn.name, SiteKind::kEntry, fn.location});
    NumberBlock(fn.body, fn.name, model.branch_sites);
  }
  return model;
}

namespace {

bool ExprEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.type != b.type || a.name != b.name ||
      a.operands.size() != b.operands.size()) {
    return false;
  }
  if (a.kind == ExprKind::kLiteral && a.literal != b.literal) return false;
  if (a.kind == ExprKind::kBinary && a.op != b.op) return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (!ExprEqual(*a.operands[i], *b.operands[i])) return false;
  }
  return true;
}

bool OptExprEqual(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return ExprEqual(*a, *b);
}

bool BlockEqual(const std::vector<Stmt>& a, const std::vector<Stmt>& b);

bool StmtEqual(const Stmt& a, const Stmt& b) {
  return a.kind == b.kind && a.assign_op == b.assign_op && a.var == b.var &&
         a.has_else == b.has_else && a.first_site == b.first_site &&
         OptExprEqual(a.target, b.target) && OptExprEqual(a.value, b.value) &&
         BlockEqual(a.then_body, b.then_body) &&
         BlockEqual(a.else_body, b.else_body);
}

bool BlockEqual(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), StmtEqual);
}

}  // namespace

bool StructurallyEqual(const ContractModel& a, const ContractModel& b) {
  if (a.name != b.name) return false;
  if (!std::equal(a.state_vars.begin(), a.state_vars.end(),
                  b.state_vars.begin(), b.state_vars.end(),
                  [](const StateVarDecl& x, const StateVarDecl& y) {
                    return x.name == y.name && x.type == y.type &&
                           x.initializer == y.initializer &&
                           x.implicit == y.implicit;
                  })) {
    return false;
  }
  if (!std::equal(a.functions.begin(), a.functions.end(), b.functions.begin(),
                  b.functions.end(),
                  [](const FunctionDecl& x, const FunctionDecl& y) {
                    if (x.name != y.name || x.payable != y.payable ||
                        x.entry_site != y.entry_site ||
                        x.params.size() != y.params.size()) {
                      return false;
                    }
                    for (std::size_t i = 0; i < x.params.size(); ++i) {
                      if (x.params[i].name != y.params[i].name ||
                          x.params[i].type != y.params[i].type) {
                        return false;
                      }
                    }
                    return BlockEqual(x.body, y.body);
                  })) {
    return false;
  }
  return std::equal(a.branch_sites.begin(), a.branch_sites.end(),
                    b.branch_sites.begin(), b.branch_sites.end(),
                    [](const BranchSite& x, const BranchSite& y) {
                      return x.id == y.id && x.function == y.function &&
                             x.kind == y.kind;
                    });
}

}  // namespace contractsim
