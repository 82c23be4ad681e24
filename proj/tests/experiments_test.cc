// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gtest/gtest.h"
#include "normrig/enumeration.h"
#include "normrig/experiments.h"
#include "normrig/operations.h"
#include "normrig/sparsity.h"

namespace normrig {
namespace {

void ExpectConsistent(const SweepReport& r) {
  EXPECT_EQ(r.instances, r.agreements + static_cast<int>(r.disagreements.size()))
      << r.name;
  EXPECT_TRUE(r.ok()) << r.ToText();
}

TEST(ExperimentsTest, SmallSweepsAgree) {
  const SweepConfig cfg;
  ExpectConsistent(RigiditySweep(2, 5, cfg));
  ExpectConsistent(CoverBoundSweep(4, cfg));
  ExpectConsistent(UvSparsityOracleSweep(5));
  EquivalenceParams eq;
  eq.max_n = 5;
  eq.random_samples = 6;
  ExpectConsistent(EquivalenceSweep(eq, cfg));
  DeleteContractParams dc;
  dc.samples = 20;
  dc.max_n = 6;
  ExpectConsistent(DeleteContractSweep(dc, cfg));
  ExpectConsistent(OperationPreservationSuite(5, cfg));
  ExpectConsistent(SupportFunctionalAudit({1.5, 4.0}, 200, 10000, 3));
}

TEST(ExperimentsTest, RerunsAreIdentical) {
  SweepConfig cfg;
  cfg.seed = 9;
  DeleteContractParams dc;
  dc.samples = 30;
  dc.max_n = 6;
  EXPECT_EQ(DeleteContractSweep(dc, cfg).ToJson().dump(),
            DeleteContractSweep(dc, cfg).ToJson().dump());
  EXPECT_EQ(OperationPreservationSuite(4, cfg).ToText(),
            OperationPreservationSuite(4, cfg).ToText());
}

TEST(ExperimentsTest, RuntimeOnlyWhenRequested) {
  const SweepReport r = CoverBoundSweep(3, SweepConfig{});
  EXPECT_FALSE(r.ToJson().contains("runtime_seconds"));
  EXPECT_TRUE(r.ToJson(true).contains("runtime_seconds"));
}

TEST(ExperimentsTest, EmptyProbe) {
  const SweepReport r = ConjectureProbe({}, 4, SweepConfig{});
  EXPECT_EQ(r.instances, 0);
  EXPECT_TRUE(r.ok());
}

TEST(ExperimentsTest, ProbeAcrossNorms) {
  std::vector<NormHandle> norms = {*ParseNorm("lp:1.5"), *ParseNorm("lp:7")};
  const SweepReport r = ConjectureProbe(norms, 4, SweepConfig{});
  EXPECT_GT(r.instances, 0);
  ExpectConsistent(r);
}

TEST(ExperimentsTest, PinnedUvVerdicts) {
  const SweepConfig cfg;
  const Graph k23 = K23Graph();
  EXPECT_FALSE(*IsUvRigidComb(k23));
  EXPECT_FALSE(StableUvGenericRank(k23, cfg, 1)->independent);
  const Graph k4uv = K4MinusUvGraph();
  EXPECT_FALSE(*IsUvRigidComb(k4uv));
  EXPECT_TRUE(StableUvGenericRank(k4uv, cfg, 1)->independent);
  const Graph two_k4 = TwoK4Graph();
  EXPECT_TRUE(*IsUvRigidComb(two_k4));
  EXPECT_TRUE(StableUvGenericRank(two_k4, cfg, 1)->infinitesimally_rigid);
}

// Splitting w into a 4-cycle through the designated pair itself adds two
// edges at u and v; the result over-counts the pair.
TEST(ExperimentsTest, FourCycleThroughDesignatedPairLosesIndependence) {
  const Graph g = K4MinusUvGraph();
  const auto out = VertexToFourCycleMove(g, 2, 4, 0, 1, {{3, 2}});
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_FALSE(IsUvSparse(*out)->sparse);
  EXPECT_FALSE(IsUvSparseBruteForce(*out)->sparse);
  EXPECT_FALSE(StableUvGenericRank(*out, SweepConfig{}, 1)->independent);
}

TEST(ExperimentsTest, RetryPolicyReportsRetries) {
  int retries = -1;
  const RankReport r = StableGenericRank(Graph::Complete(4), SweepConfig{}, 5, &retries);
  EXPECT_EQ(r.rank, 6);
  EXPECT_EQ(retries, 0);
}

}  // namespace
}  // namespace normrig
