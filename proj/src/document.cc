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

#include "contractsim/document.h"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <limits>

namespace contractsim {

using nlohmann::json;

std::string Sha256Hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(),
             nullptr);
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string Canonical(const json& j) { return j.dump(2) + "\n"; }

namespace {

// ---- readers -------------------------------------------------------------

[[noreturn]] void Malformed(std::string_view what) {
  throw DocumentError("malformed document: " + std::string(what));
}

const json& Field(const json& obj, const char* key) {
  if (!obj.is_object()) Malformed(std::string("expected object around '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) Malformed(std::string("missing '") + key + "'");
  return *it;
}

const json& ArrayField(const json& obj, const char* key) {
  const json& j = Field(obj, key);
  if (!j.is_array()) Malformed(std::string("'") + key + "' must be an array");
  return j;
}

std::string StringField(const json& obj, const char* key) {
  const json& j = Field(obj, key);
  if (!j.is_string()) Malformed(std::string("'") + key + "' must be a string");
  return j.get<std::string>();
}

bool BoolField(const json& obj, const char* key) {
  const json& j = Field(obj, key);
  if (!j.is_boolean()) Malformed(std::string("'") + key + "' must be a boolean");
  return j.get<bool>();
}

std::int64_t AsInt(const json& j, std::string_view what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  Malformed(std::string(what) + " must be an integer");
}

int IntField(const json& obj, const char* key) {
  std::int64_t v = AsInt(Field(obj, key), key);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    Malformed(std::string("'") + key + "' out of range");
  }
  return static_cast<int>(v);
}

Uint AsUint(const json& j, std::string_view what) {
  if (j.is_string()) {
    if (auto v = ParseUint(j.get<std::string>())) return *v;
  } else if (j.is_number_unsigned()) {
    return j.get<std::uint64_t>();
  } else if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<Uint>(j.get<std::int64_t>());
  }
  Malformed(std::string(what) + " must be a non-negative decimal integer");
}

Int AsInt128(const json& j, std::string_view what) {
  if (j.is_string()) {
    if (auto v = ParseInt(j.get<std::string>())) return *v;
  }
  Malformed(std::string(what) + " must be a decimal string");
}

Recipient AsRecipient(const json& j) {
  if (j.is_string()) {
    if (auto r = Recipient::Parse(j.get<std::string>())) return *r;
  }
  Malformed("recipient must be \"others\" or a user index string");
}

Coverage AsCoverage(const json& j) {
  if (!j.is_array()) Malformed("coverage must be an array");
  Coverage out;
  for (const auto& site : j) out.insert(static_cast<int>(AsInt(site, "site id")));
  return out;
}

Value ValueFrom(ValueType type, const json& j) {
  if (j.is_string()) {
    if (auto v = ParseValue(type, j.get<std::string>())) return *v;
  }
  Malformed("bad " + std::string(TypeName(type)) + " value");
}

ValueType ValueTypeFrom(const json& j) {
  if (j.is_string()) {
    if (auto t = ParseValueType(j.get<std::string>())) return *t;
  }
  Malformed("unknown value type");
}

// ---- value encodings -----------------------------------------------------

json CoverageToJson(const Coverage& coverage) {
  json out = json::array();
  for (int site : coverage) out.push_back(site);
  return out;
}

json TypedValue(const Value& v) {
  return {{"type", std::string(TypeName(TypeOf(v)))}, {"value", ValueToString(v)}};
}

// Function arguments are uint or address; bool only occurs in expressions.
Value ArgFrom(const json& j) {
  ValueType type = ValueTypeFrom(Field(j, "type"));
  if (type == ValueType::kBool) Malformed("arguments must be uint or address");
  return ValueFrom(type, Field(j, "value"));
}

json OptionalDelta(const std::optional<SignedAmount>& delta) {
  return delta ? json(delta->ToString()) : json(nullptr);
}

std::optional<SignedAmount> OptionalDeltaFrom(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    if (auto d = SignedAmount::Parse(j.get<std::string>())) return d;
  }
  Malformed("delta must be null or a decimal string");
}

// ---- calls ---------------------------------------------------------------

json CallToJson(const FunctionCall& call) {
  json args = json::array();
  for (const auto& a : call.args) args.push_back(TypedValue(a));
  return {{"caller", call.caller},
          {"function", call.function},
          {"value", ToString(call.value)},
          {"args", std::move(args)}};
}

FunctionCall CallFromJson(const json& j) {
  FunctionCall call;
  std::int64_t caller = AsInt(Field(j, "caller"), "caller");
  if (caller < 0 || caller > std::numeric_limits<UserIndex>::max()) {
    Malformed("caller out of range");
  }
  call.caller = static_cast<UserIndex>(caller);
  call.function = StringField(j, "function");
  call.value = j.contains("value") ? AsUint(j["value"], "value") : Uint{0};
  if (j.contains("args")) {
    if (!j["args"].is_array()) Malformed("'args' must be an array");
    for (const auto& a : j["args"]) call.args.push_back(ArgFrom(a));
  }
  return call;
}

json SequenceToJson(const CallSequence& calls) {
  json out = json::array();
  for (const auto& c : calls) out.push_back(CallToJson(c));
  return out;
}

CallSequence SequenceFromJson(const json& j) {
  if (!j.is_array()) Malformed("call sequence must be an array");
  CallSequence calls;
  for (const auto& c : j) calls.push_back(CallFromJson(c));
  return calls;
}

// ---- records -------------------------------------------------------------

json BalancesToJson(const BalanceSnapshot& b) {
  json users = json::array();
  for (Uint u : b.users) users.push_back(ToString(u));
  return {{"contract", ToString(b.contract)},
          {"users", std::move(users)},
          {"others", ToString(b.others)}};
}

BalanceSnapshot BalancesFromJson(const json& j) {
  BalanceSnapshot b;
  b.contract = AsUint(Field(j, "contract"), "contract balance");
  for (const auto& u : ArrayField(j, "users")) {
    b.users.push_back(AsUint(u, "user balance"));
  }
  b.others = AsUint(Field(j, "others"), "others balance");
  return b;
}

json RecordToJson(const CallRecord& r) {
  json txs = json::array();
  for (const auto& tx : r.internal_txs) {
    txs.push_back({{"to", tx.to.ToString()}, {"value", ToString(tx.value)}});
  }
  json changes = json::array();
  for (const auto& c : r.state_changes) {
    changes.push_back({{"var", c.var},
                       {"type", std::string(TypeName(TypeOf(c.old_value)))},
                       {"old", ValueToString(c.old_value)},
                       {"new", ValueToString(c.new_value)},
                       {"delta", OptionalDelta(c.numeric_delta)}});
  }
  return {{"index", r.index},
          {"call", CallToJson(r.call)},
          {"reverted", r.reverted},
          {"revert_reason", std::string(RevertReasonName(r.revert_reason))},
          {"inflow", ToString(r.inflow)},
          {"internal_txs", std::move(txs)},
          {"state_changes", std::move(changes)},
          {"balances_after", BalancesToJson(r.balances_after)},
          {"covered_sites", CoverageToJson(r.covered_sites)}};
}

CallRecord RecordFromJson(const json& j) {
  CallRecord r;
  r.index = IntField(j, "index");
  r.call = CallFromJson(Field(j, "call"));
  r.reverted = BoolField(j, "reverted");
  auto reason = ParseRevertReason(StringField(j, "revert_reason"));
  if (!reason) Malformed("unknown revert reason");
  r.revert_reason = *reason;
  r.inflow = AsUint(Field(j, "inflow"), "inflow");
  for (const auto& tx : ArrayField(j, "internal_txs")) {
    r.internal_txs.push_back(
        {AsRecipient(Field(tx, "to")), AsUint(Field(tx, "value"), "tx value")});
  }
  for (const auto& c : ArrayField(j, "state_changes")) {
    ValueType type = ValueTypeFrom(Field(c, "type"));
    r.state_changes.push_back({StringField(c, "var"),
                               ValueFrom(type, Field(c, "old")),
                               ValueFrom(type, Field(c, "new")),
                               OptionalDeltaFrom(Field(c, "delta"))});
  }
  r.balances_after = BalancesFromJson(Field(j, "balances_after"));
  r.covered_sites = AsCoverage(Field(j, "covered_sites"));
  return r;
}

// ---- analytics -----------------------------------------------------------

json SeriesToJson(const std::vector<Int>& series) {
  json out = json::array();
  for (Int v : series) out.push_back(ToString(v));
  return out;
}

std::vector<Int> SeriesFromJson(const json& j) {
  if (!j.is_array()) Malformed("series must be an array");
  std::vector<Int> out;
  for (const auto& v : j) out.push_back(AsInt128(v, "series value"));
  return out;
}

json BalanceSeriesToJson(const BalanceSeries& s) {
  json users = json::array();
  for (const auto& u : s.users) users.push_back(SeriesToJson(u));
  return {{"contract", SeriesToJson(s.contract)},
          {"users", std::move(users)},
          {"others", SeriesToJson(s.others)}};
}

BalanceSeries BalanceSeriesFromJson(const json& j) {
  BalanceSeries s;
  s.contract = SeriesFromJson(Field(j, "contract"));
  for (const auto& u : ArrayField(j, "users")) s.users.push_back(SeriesFromJson(u));
  s.others = SeriesFromJson(Field(j, "others"));
  return s;
}

json SummaryToJson(const FunctionSummary& s) {
  return {{"function", s.function},
          {"payable", s.payable},
          {"total_calls", s.total_calls},
          {"calls_to_contract", s.calls_to_contract},
          {"calls_triggering_outflow", s.calls_triggering_outflow},
          {"to_contract", s.to_contract},
          {"to_caller", s.to_caller},
          {"to_others", s.to_others}};
}

FunctionSummary SummaryFromJson(const json& j) {
  FunctionSummary s;
  s.function = StringField(j, "function");
  s.payable = BoolField(j, "payable");
  s.total_calls = IntField(j, "total_calls");
  s.calls_to_contract = IntField(j, "calls_to_contract");
  s.calls_triggering_outflow = IntField(j, "calls_triggering_outflow");
  s.to_contract = BoolField(j, "to_contract");
  s.to_caller = BoolField(j, "to_caller");
  s.to_others = BoolField(j, "to_others");
  return s;
}

json FlowsToJson(const FlowClassification& f) {
  json links = json::array();
  for (const auto& l : f.links) {
    links.push_back({{"caller", l.caller}, {"receiver", l.receiver.ToString()}});
  }
  return {{"to_contract", f.to_contract},
          {"to_caller", f.to_caller},
          {"to_others", f.to_others},
          {"links", std::move(links)}};
}

FlowClassification FlowsFromJson(const json& j) {
  FlowClassification f;
  f.to_contract = BoolField(j, "to_contract");
  f.to_caller = BoolField(j, "to_caller");
  f.to_others = BoolField(j, "to_others");
  for (const auto& l : ArrayField(j, "links")) {
    std::int64_t caller = AsInt(Field(l, "caller"), "link caller");
    if (caller < 0) Malformed("link caller out of range");
    f.links.push_back({static_cast<UserIndex>(caller),
                       AsRecipient(Field(l, "receiver"))});
  }
  return f;
}

json VariableSeriesToJson(const VariableSeries& v) {
  json cells = json::array();
  for (const auto& cell : v.cells) {
    if (!cell) {
      cells.push_back(nullptr);
      continue;
    }
    cells.push_back({{"old", ValueToString(cell->old_value)},
                     {"new", ValueToString(cell->new_value)},
                     {"delta", OptionalDelta(cell->delta)}});
  }
  return {{"var", v.var},
          {"kind", v.kind == VariableKind::kNumeric ? "numeric" : "address"},
          {"cells", std::move(cells)}};
}

VariableSeries VariableSeriesFromJson(const json& j) {
  VariableSeries v;
  v.var = StringField(j, "var");
  std::string kind = StringField(j, "kind");
  if (kind == "numeric") {
    v.kind = VariableKind::kNumeric;
  } else if (kind == "address") {
    v.kind = VariableKind::kAddress;
  } else {
    Malformed("unknown variable kind");
  }
  ValueType type =
      v.kind == VariableKind::kNumeric ? ValueType::kUint : ValueType::kAddress;
  for (const auto& cell : ArrayField(j, "cells")) {
    if (cell.is_null()) {
      v.cells.emplace_back();
      continue;
    }
    v.cells.push_back(VariableChange{ValueFrom(type, Field(cell, "old")),
                                     ValueFrom(type, Field(cell, "new")),
                                     OptionalDeltaFrom(Field(cell, "delta"))});
  }
  return v;
}

json SimulationToJson(const SimulationDocument& s) {
  json calls = json::array();
  for (const auto& r : s.simulation.records) calls.push_back(RecordToJson(r));
  json summaries = json::array();
  for (const auto& f : s.function_summaries) summaries.push_back(SummaryToJson(f));
  json flows = json::array();
  for (const auto& f : s.flow_classifications) flows.push_back(FlowsToJson(f));
  json variables = json::array();
  for (const auto& v : s.variable_series) {
    variables.push_back(VariableSeriesToJson(v));
  }
  return {{"id", s.id},
          {"calls", std::move(calls)},
          {"coverage", CoverageToJson(s.simulation.coverage)},
          {"balance_series", BalanceSeriesToJson(s.balance_series)},
          {"function_summaries", std::move(summaries)},
          {"flow_classifications", std::move(flows)},
          {"variable_series", std::move(variables)}};
}

SimulationDocument SimulationFromJson(const json& j) {
  SimulationDocument s;
  s.id = IntField(j, "id");
  for (const auto& r : ArrayField(j, "calls")) {
    s.simulation.records.push_back(RecordFromJson(r));
  }
  s.simulation.coverage = AsCoverage(Field(j, "coverage"));
  s.balance_series = BalanceSeriesFromJson(Field(j, "balance_series"));
  for (const auto& f : ArrayField(j, "function_summaries")) {
    s.function_summaries.push_back(SummaryFromJson(f));
  }
  for (const auto& f : ArrayField(j, "flow_classifications")) {
    s.flow_classifications.push_back(FlowsFromJson(f));
  }
  for (const auto& v : ArrayField(j, "variable_series")) {
    s.variable_series.push_back(VariableSeriesFromJson(v));
  }
  return s;
}

// ---- contract ------------------------------------------------------------

std::optional<VarType> ParseVarType(std::string_view name) {
  for (VarType t : {VarType::kUint, VarType::kAddress, VarType::kMapping,
                    VarType::kAddressArray}) {
    if (VarTypeName(t) == name) return t;
  }
  return std::nullopt;
}

json ContractToJson(const ContractInfo& c) {
  json interface = json::array();
  for (const auto& f : c.interface) {
    json params = json::array();
    for (ValueType p : f.params) params.push_back(std::string(TypeName(p)));
    interface.push_back(
        {{"name", f.name}, {"params", std::move(params)}, {"payable", f.payable}});
  }
  json vars = json::array();
  for (const auto& v : c.state_vars) {
    vars.push_back({{"name", v.name},
                    {"type", std::string(VarTypeName(v.type))},
                    {"implicit", v.implicit}});
  }
  json sites = json::array();
  for (const auto& s : c.branch_sites) {
    sites.push_back({{"id", s.id},
                     {"function", s.function},
                     {"kind", std::string(SiteKindName(s.kind))},
                     {"line", s.location.line},
                     {"column", s.location.column}});
  }
  return {{"name", c.name},
          {"source_digest", c.source_digest},
          {"interface", std::move(interface)},
          {"state_vars", std::move(vars)},
          {"branch_sites", std::move(sites)}};
}

ContractInfo ContractFromJson(const json& j) {
  ContractInfo c;
  c.name = StringField(j, "name");
  c.source_digest = StringField(j, "source_digest");
  for (const auto& f : ArrayField(j, "interface")) {
    FunctionSignature sig;
    sig.name = StringField(f, "name");
    sig.payable = BoolField(f, "payable");
    for (const auto& p : ArrayField(f, "params")) sig.params.push_back(ValueTypeFrom(p));
    c.interface.push_back(std::move(sig));
  }
  for (const auto& v : ArrayField(j, "state_vars")) {
    auto type = ParseVarType(StringField(v, "type"));
    if (!type) Malformed("unknown state variable type");
    c.state_vars.push_back({StringField(v, "name"), *type, BoolField(v, "implicit")});
  }
  for (const auto& s : ArrayField(j, "branch_sites")) {
    auto kind = ParseSiteKind(StringField(s, "kind"));
    if (!kind) Malformed("unknown branch site kind");
    c.branch_sites.push_back({IntField(s, "id"), StringField(s, "function"), *kind,
                              {IntField(s, "line"), IntField(s, "column")}});
  }
  return c;
}

json BugToJson(const BugReport& b) {
  return {{"kind", std::string(BugKindName(b.kind))},
          {"function", b.function},
          {"calls", SequenceToJson(b.sequence)}};
}

BugReport BugFromJson(const json& j) {
  auto kind = ParseBugKind(StringField(j, "kind"));
  if (!kind) Malformed("unknown bug kind");
  return {*kind, StringField(j, "function"), SequenceFromJson(Field(j, "calls"))};
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

// ---- public API ------------------------------------------------------------

json ConfigToJson(const FuzzConfig& c) {
  return {{"num_users", c.num_users},
          {"endowment", ToString(c.endowment)},
          {"owner_index", c.owner_index},
          {"iteration_budget", c.iteration_budget},
          {"rng_seed", std::to_string(c.rng_seed)},
          {"max_value_per_call", ToString(c.max_value_per_call)},
          {"max_sequence_length", c.max_sequence_length},
          {"max_simulations", c.max_simulations}};
}

FuzzConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  FuzzConfig c;
  auto read_int = [&](const char* key, int& out) {
    if (!j.contains(key)) return;
    const json& v = j[key];
    std::optional<Int> parsed;
    if (v.is_number_integer()) {
      parsed = v.get<std::int64_t>();
    } else if (v.is_string()) {
      parsed = ParseInt(v.get<std::string>());
    }
    if (!parsed || *parsed < std::numeric_limits<int>::min() ||
        *parsed > std::numeric_limits<int>::max()) {
      throw ConfigError(std::string("config field '") + key +
                        "' must be an integer");
    }
    out = static_cast<int>(*parsed);
  };
  auto read_uint = [&](const char* key) -> std::optional<Uint> {
    if (!j.contains(key)) return std::nullopt;
    const json& v = j[key];
    if (v.is_string()) {
      if (auto u = ParseUint(v.get<std::string>())) return u;
    } else if (v.is_number_unsigned()) {
      return v.get<std::uint64_t>();
    } else if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<Uint>(v.get<std::int64_t>());
    }
    throw ConfigError(std::string("config field '") + key +
                      "' must be a non-negative integer");
  };
  read_int("num_users", c.num_users);
  read_int("owner_index", c.owner_index);
  read_int("iteration_budget", c.iteration_budget);
  read_int("max_sequence_length", c.max_sequence_length);
  read_int("max_simulations", c.max_simulations);
  if (auto v = read_uint("endowment")) c.endowment = *v;
  if (auto v = read_uint("max_value_per_call")) c.max_value_per_call = *v;
  if (auto v = read_uint("rng_seed")) {
    if (*v > std::numeric_limits<std::uint64_t>::max()) {
      throw ConfigError("config field 'rng_seed' exceeds 64 bits");
    }
    c.rng_seed = static_cast<std::uint64_t>(*v);
  }
  return c;
}

ContractInfo DescribeContract(const ContractModel& model,
                              std::string_view source) {
  ContractInfo info;
  info.name = model.name;
  info.source_digest = "sha256:" + Sha256Hex(source);
  info.interface = ExtractInterface(model);
  for (const auto& v : model.state_vars) {
    info.state_vars.push_back({v.name, v.type, v.implicit});
  }
  info.branch_sites = model.branch_sites;
  return info;
}

SimulationDocument AnalyzeSimulation(int id, Simulation sim,
                                     const ContractModel& model,
                                     const FuzzConfig& config) {
  SimulationDocument doc;
  doc.id = id;
  doc.balance_series = NetBalanceSeries(sim, config);
  doc.function_summaries = SummarizeFunctions(sim, model);
  for (const auto& r : sim.records) {
    doc.flow_classifications.push_back(ClassifyFlows(r));
  }
  doc.variable_series = VariableChangeSeries(sim, model);
  doc.simulation = std::move(sim);
  return doc;
}

ResultDocument BuildDocument(const ContractModel& model,
                             std::string_view source, const FuzzConfig& config,
                             const FuzzResult& result) {
  ResultDocument doc;
  doc.contract = DescribeContract(model, source);
  doc.config = config;
  for (std::size_t i = 0; i < result.simulations.size(); ++i) {
    doc.simulations.push_back(AnalyzeSimulation(
        static_cast<int>(i), result.simulations[i], model, config));
  }
  doc.bugs = result.bugs;
  doc.global_coverage = result.global_coverage;
  doc.iterations_run = result.iterations_run;
  doc.seed_pool_size = result.seed_pool_size;
  return doc;
}

json DocumentToJson(const ResultDocument& d) {
  json sims = json::array();
  for (const auto& s : d.simulations) sims.push_back(SimulationToJson(s));
  json bugs = json::array();
  for (const auto& b : d.bugs) bugs.push_back(BugToJson(b));
  return {{"schema_version", d.schema_version},
          {"contract", ContractToJson(d.contract)},
          {"config", ConfigToJson(d.config)},
          {"simulations", std::move(sims)},
          {"bugs", std::move(bugs)},
          {"global_coverage", CoverageToJson(d.global_coverage)},
          {"iterations_run", d.iterations_run},
          {"seed_pool_size", d.seed_pool_size}};
}

std::string SerializeDocument(const ResultDocument& document) {
  return Canonical(DocumentToJson(document));
}

ResultDocument ParseDocument(std::string_view text) {
  json j = ParseJson(text);
  ResultDocument d;
  d.schema_version = StringField(j, "schema_version");
  if (d.schema_version != kSchemaVersion) {
    throw DocumentError("unsupported schema_version '" + d.schema_version + "'");
  }
  d.contract = ContractFromJson(Field(j, "contract"));
  try {
    d.config = ConfigFromJson(Field(j, "config"));
  } catch (const ConfigError& e) {
    Malformed(e.what());
  }
  for (const auto& s : ArrayField(j, "simulations")) {
    d.simulations.push_back(SimulationFromJson(s));
  }
  for (const auto& b : ArrayField(j, "bugs")) d.bugs.push_back(BugFromJson(b));
  d.global_coverage = AsCoverage(Field(j, "global_coverage"));
  d.iterations_run = IntField(j, "iterations_run");
  d.seed_pool_size = IntField(j, "seed_pool_size");
  return d;
}

std::string ExportDocument(const ContractModel& model, std::string_view source,
                           const FuzzConfig& config, const FuzzResult& result) {
  return SerializeDocument(BuildDocument(model, source, config, result));
}

FuzzResult ReplayResult(const Simulation& sim) {
  FuzzResult result;
  result.simulations = {sim};
  result.global_coverage = sim.coverage;
  result.seed_pool_size = 1;
  CallSequence calls = sim.Calls();
  for (BugKind kind : DetectBugs(sim)) {
    RevertReason reason = kind == BugKind::kArithmeticOverflow
                              ? RevertReason::kArithmeticOverflow
                              : RevertReason::kTransferFailure;
    for (const auto& r : sim.records) {
      if (r.revert_reason == reason) {
        result.bugs.push_back({kind, r.call.function, calls});
        break;
      }
    }
  }
  return result;
}

std::string SerializeSimulation(const SimulationDocument& simulation) {
  return Canonical(SimulationToJson(simulation));
}

std::string SerializeCallSequence(const CallSequence& calls,
                                  const FuzzConfig* config) {
  json j = {{"schema_version", std::string(kSchemaVersion)},
            {"calls", SequenceToJson(calls)}};
  if (config != nullptr) j["config"] = ConfigToJson(*config);
  return Canonical(j);
}

CallSequenceFile ParseCallSequences(std::string_view text) {
  json j = ParseJson(text);
  if (!j.is_object()) Malformed("call-sequence file must be a JSON object");
  CallSequenceFile file;
  if (j.contains("config")) {
    try {
      file.config = ConfigFromJson(j["config"]);
    } catch (const ConfigError& e) {
      Malformed(e.what());
    }
  }
  if (j.contains("calls")) {
    file.sequences.push_back(SequenceFromJson(j["calls"]));
  } else if (j.contains("sequences")) {
    for (const auto& s : ArrayField(j, "sequences")) {
      file.sequences.push_back(SequenceFromJson(s));
    }
  } else {
    Malformed("expected 'calls' or 'sequences'");
  }
  return file;
}

}  // namespace contractsim
