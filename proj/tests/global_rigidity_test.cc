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
#include "normrig/global_rigidity.h"
#include "normrig/sparsity.h"

namespace normrig {
namespace {

TEST(BaseGraphTest, CountsAndRigidity) {
  const Graph k5e = BaseGraph(BaseTag::kK5MinusE);
  EXPECT_EQ(k5e.num_vertices(), 5);
  EXPECT_EQ(k5e.num_edges(), 9);
  EXPECT_FALSE(k5e.HasEdge(3, 4));
  const Graph h = BaseGraph(BaseTag::kHGraph);
  EXPECT_EQ(h.num_vertices(), 6);
  EXPECT_EQ(h.num_edges(), 11);
  for (const Graph& g : {k5e, h}) {
    EXPECT_TRUE(IsRigidComb(g));
    EXPECT_TRUE(IsRedundantlyRigidComb(g));
    EXPECT_EQ(*PebbleRank(g, 2, 2), 2 * g.num_vertices() - 2);
  }
  EXPECT_FALSE(IsRedundantlyRigidComb(Graph::Complete(4)));
}

TEST(BaseGraphTest, TagNames) {
  EXPECT_EQ(BaseTagName(BaseTag::kHGraph), "H_GRAPH");
  EXPECT_EQ(*ParseBaseTag("K5_MINUS_E"), BaseTag::kK5MinusE);
  EXPECT_FALSE(ParseBaseTag("K6").ok());
}

TEST(CertifyTest, VertexSplitOfH) {
  const auto seq = ParseSequence("base H_GRAPH\nsplit 2 | 0 1 | 3 4 5 | 3 -> 6 2\n");
  ASSERT_TRUE(seq.ok()) << seq.status();
  CertifyOptions options;
  options.numeric_norm = DefaultNorm();
  const CertificateReport r = CertifySequence(*seq, options);
  EXPECT_TRUE(r.completed);
  EXPECT_TRUE(r.pass_split_rigid);
  EXPECT_TRUE(r.pass_split_redundant);
  EXPECT_EQ(r.numeric_recheck, true);
  EXPECT_EQ(r.final_graph.num_vertices(), 7);
  EXPECT_EQ(r.final_graph.num_edges(), 13);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_TRUE(r.steps[0].is_split);
}

TEST(CertifyTest, OneExtensionAsSplit) {
  const auto seq =
      ParseSequence("# comment\nbase H_GRAPH\n\nsplit 2 | 4 | 0 1 3 5 | 3 -> 6 2  # v = z\n");
  ASSERT_TRUE(seq.ok()) << seq.status();
  const CertificateReport r = CertifySequence(*seq);
  EXPECT_TRUE(r.pass_split_rigid);
  EXPECT_TRUE(r.pass_split_redundant);
  EXPECT_FALSE(r.numeric_recheck.has_value());
  EXPECT_EQ(r.final_graph.num_edges(), 2 * r.final_graph.num_vertices() - 1);
}

TEST(CertifyTest, FailingSplit) {
  // u gets no old neighbours: G' - uv leaves u with degree 1.
  const auto seq = ParseSequence("base K5_MINUS_E\nsplit 0 | | 1 2 3 4 | 1 -> 5 0\n");
  ASSERT_TRUE(seq.ok());
  const CertificateReport r = CertifySequence(*seq);
  EXPECT_TRUE(r.completed);
  EXPECT_FALSE(r.pass_split_rigid);
  EXPECT_FALSE(r.pass_split_redundant);
}

TEST(CertifyTest, RejectsLowDegreeVertexAddition) {
  const auto seq = ParseSequence("base K5_MINUS_E\naddvertex 5: 0 1\naddedge 0 1\n");
  ASSERT_TRUE(seq.ok());
  const CertificateReport r = CertifySequence(*seq);
  EXPECT_FALSE(r.completed);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_FALSE(r.steps[0].applied);
  EXPECT_FALSE(r.steps[0].error.empty());
}

TEST(CertifyTest, RecordsVertexDegrees) {
  const auto seq = ParseSequence("base K5_MINUS_E\naddvertex 5: 0 1 2 3\naddedge 3 4\n");
  const CertificateReport r = CertifySequence(*seq);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.steps[0].degree, 4);
  EXPECT_EQ(r.final_graph.num_edges(), 9 + 4 + 1);
}

TEST(SequenceTest, ParseErrors) {
  EXPECT_FALSE(ParseSequence("").ok());
  EXPECT_FALSE(ParseSequence("split 2 | 0 | 1 | 1 -> 6 2\n").ok());
  EXPECT_FALSE(ParseSequence("base H_GRAPH\nfrob 1 2\n").ok());
  EXPECT_FALSE(ParseSequence("base H_GRAPH\nzeroext 0 1 -> 6\n").ok());
  const auto bad = ParseSequence("base H_GRAPH\naddedge 0\n");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.status().message().find("at line 2"), std::string::npos);
}

TEST(SequenceTest, FormatRoundTrip) {
  const std::string text =
      "base H_GRAPH\nsplit 2 | 0 1 | 3 4 5 | 3 -> 6 2\naddvertex 7: 0 1 6\naddedge 7 5\n";
  const auto seq = ParseSequence(text);
  ASSERT_TRUE(seq.ok());
  EXPECT_EQ(FormatSequence(*seq), text);
}

TEST(GeneratorTest, ResultsRecertify) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.target_size = 5 + static_cast<int>(seed % 6);
    const auto g = RandomCertifiedGraph(params);
    ASSERT_TRUE(g.ok()) << g.status();
    EXPECT_EQ(g->graph.num_vertices(), params.target_size);
    EXPECT_TRUE(g->report.pass_split_rigid);
    const CertificateReport again = CertifySequence(g->sequence);
    EXPECT_TRUE(again.completed);
    EXPECT_TRUE(again.pass_split_rigid);
    EXPECT_EQ(again.final_graph, g->graph);
    EXPECT_TRUE(IsRigidComb(g->graph));
    EXPECT_GE(g->graph.num_edges(), 2 * g->graph.num_vertices() - 1);
  }
}

TEST(GeneratorTest, DeterministicInSeed) {
  GeneratorParams params;
  params.seed = 42;
  params.target_size = 9;
  EXPECT_EQ(FormatSequence(RandomCertifiedGraph(params)->sequence),
            FormatSequence(RandomCertifiedGraph(params)->sequence));
  params.target_size = 5;
  EXPECT_EQ(RandomCertifiedGraph(params)->sequence.base, BaseTag::kK5MinusE);
}

}  // namespace
}  // namespace normrig
