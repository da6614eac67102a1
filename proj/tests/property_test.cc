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

// Randomized checks over generated contracts, configurations and call
// sequences. Seeds are fixed so failures reproduce.

#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "contractsim/document.h"
#include "contractsim/fuzz.h"
#include "contractsim/minisol.h"
#include "contractsim/vm.h"
#include "oracle/fixtures.h"
#include "oracle/invariants.h"

namespace contractsim {
namespace {

using testing::RandomConfig;
using testing::RandomContractSource;
using testing::RandomSequence;

constexpr int kCases = 300;

TEST(PropertyTest, PrettyPrintIsAFixedPoint) {
  Rng rng(101);
  for (int i = 0; i < kCases; ++i) {
    std::string source = RandomContractSource(rng);
    ContractModel model = Parse(source);
    std::string printed = PrettyPrint(model);
    ContractModel reparsed = Parse(printed);
    ASSERT_TRUE(StructurallyEqual(model, reparsed)) << source;
    ASSERT_EQ(PrettyPrint(reparsed), printed);
    ASSERT_EQ(reparsed.branch_sites.size(), model.branch_sites.size());
  }
}

TEST(PropertyTest, ReplayIsDeterministicAndSatisfiesInvariants) {
  Rng rng(202);
  for (int i = 0; i < kCases; ++i) {
    std::string source = RandomContractSource(rng);
    ContractModel model = Parse(source);
    FuzzConfig config = RandomConfig(rng);
    CallSequence calls = RandomSequence(model, config, rng, 12);
    Simulation sim = Replay(model, config, calls);
    ASSERT_EQ(sim, Replay(model, config, calls)) << source;
    ASSERT_EQ(sim.Calls(), calls);
    for (const CallRecord& r : sim.records) {
      auto v = testing::CheckConservation(r, config);
      ASSERT_FALSE(v) << *v << "\n" << source;
    }
    for (auto v : {testing::CheckSnapshotsFromFlows(sim, config),
                   testing::CheckSeriesAgainstSnapshots(sim, config),
                   testing::CheckStateChangeChaining(sim, model, config),
                   testing::CheckSummaryRecount(sim, model)}) {
      ASSERT_FALSE(v) << *v << "\n" << source;
    }
  }
}

TEST(PropertyTest, SimulationCoverageIsUnionOfCallCoverage) {
  Rng rng(303);
  for (int i = 0; i < kCases; ++i) {
    ContractModel model = Parse(RandomContractSource(rng));
    FuzzConfig config = RandomConfig(rng);
    Simulation sim = Replay(model, config, RandomSequence(model, config, rng, 8));
    Coverage merged;
    for (const CallRecord& r : sim.records) {
      merged.insert(r.covered_sites.begin(), r.covered_sites.end());
      // Every executed call covers its function's entry site.
      bool has_entry = std::any_of(
          r.covered_sites.begin(), r.covered_sites.end(), [&](int id) {
            const BranchSite& s = model.branch_sites[id];
            return s.kind == SiteKind::kEntry && s.function == r.call.function;
          });
      ASSERT_TRUE(has_entry);
    }
    ASSERT_EQ(merged, sim.coverage);
  }
}

TEST(PropertyTest, FuzzOutputIsDeterministicAndConsistent) {
  Rng rng(404);
  for (int i = 0; i < 60; ++i) {
    std::string source = RandomContractSource(rng);
    ContractModel model = Parse(source);
    FuzzConfig config = RandomConfig(rng);
    FuzzResult result = Fuzz(model, config);
    ASSERT_EQ(result, Fuzz(model, config)) << source;
    ASSERT_LE(static_cast<int>(result.simulations.size()), config.max_simulations);
    ASSERT_GE(result.seed_pool_size, static_cast<int>(result.simulations.size()));
    Coverage reported;
    for (const Simulation& sim : result.simulations) {
      ASSERT_EQ(sim, Replay(model, config, sim.Calls()));
      ASSERT_LE(static_cast<int>(sim.records.size()), config.max_sequence_length);
      reported.insert(sim.coverage.begin(), sim.coverage.end());
    }
    ASSERT_TRUE(std::includes(result.global_coverage.begin(),
                              result.global_coverage.end(), reported.begin(),
                              reported.end()));
    for (const BugReport& bug : result.bugs) {
      std::vector<BugKind> kinds = DetectBugs(Replay(model, config, bug.sequence));
      ASSERT_NE(std::find(kinds.begin(), kinds.end(), bug.kind), kinds.end());
    }
  }
}

TEST(PropertyTest, DocumentsRoundTripByteForByte) {
  Rng rng(606);
  for (int i = 0; i < 40; ++i) {
    std::string source = RandomContractSource(rng);
    ContractModel model = Parse(source);
    FuzzConfig config = RandomConfig(rng);
    std::string text = ExportDocument(model, source, config, Fuzz(model, config));
    ASSERT_EQ(SerializeDocument(ParseDocument(text)), text);
  }
}

TEST(PropertyTest, CallSequenceFilesRoundTrip) {
  Rng rng(707);
  for (int i = 0; i < kCases; ++i) {
    ContractModel model = Parse(RandomContractSource(rng));
    FuzzConfig config = RandomConfig(rng);
    CallSequence calls = RandomSequence(model, config, rng, 10);
    CallSequenceFile file = ParseCallSequences(SerializeCallSequence(calls, &config));
    ASSERT_EQ(file.sequences.size(), 1u);
    ASSERT_EQ(file.sequences[0], calls);
    ASSERT_TRUE(file.config.has_value());
    ASSERT_EQ(ConfigToJson(*file.config), ConfigToJson(config));
  }
}

}  // namespace
}  // namespace contractsim
