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


#include <random>

#include "gtest/gtest.h"
#include "normrig/enumeration.h"
#include "normrig/global_rigidity.h"
#include "normrig/sparsity.h"
#include "test_util.h"

namespace normrig {
namespace {

TEST(PebbleGameTest, MatchesSubsetOracle) {
  std::mt19937_64 rng(3);
  const std::pair<int, int> kls[] = {{2, 2}, {2, 3}, {1, 1}, {2, 1}, {3, 3}};
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = static_cast<int>(rng() % (std::min(n * (n - 1) / 2, 12) + 1));
    const Graph g = RandomGraphWithEdges(n, m, rng);
    for (auto [k, l] : kls) {
      const auto report = CheckSparse(g, k, l);
      ASSERT_TRUE(report.ok());
      EXPECT_EQ(report->rank, testing::SparseRankBySubsets(g, k, l))
          << g.DebugString() << " k=" << k << " l=" << l;
      EXPECT_EQ(report->sparse, testing::IsSparseBySubsets(g, g.edges(), k, l));
    }
  }
}

TEST(PebbleGameTest, RejectionCarriesAViolatingSet) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = RandomGraphWithEdges(n, 2 * n - 1 + static_cast<int>(rng() % 3), rng);
    const auto report = CheckSparse(g, 2, 2);
    ASSERT_TRUE(report.ok());
    ASSERT_FALSE(report->sparse);
    ASSERT_TRUE(report->rejected_edge.has_value());
    const auto& set = report->violating_set;
    EXPECT_TRUE(std::count(set.begin(), set.end(), report->rejected_edge->a));
    EXPECT_TRUE(std::count(set.begin(), set.end(), report->rejected_edge->b));
    EXPECT_EQ(report->violating_count, g.InducedEdgeCount(set));
    EXPECT_EQ(report->violating_bound, 2 * static_cast<int>(set.size()) - 2);
    EXPECT_GT(report->violating_count, report->violating_bound);
  }
}

TEST(PebbleGameTest, RejectsBadParameters) {
  EXPECT_FALSE(CheckSparse(Graph::Complete(3), 0, 0).ok());
  EXPECT_FALSE(CheckSparse(Graph::Complete(3), 2, 4).ok());
  EXPECT_FALSE(CheckSparse(Graph::Complete(3), 2, -1).ok());
}

TEST(SparsityTest, PinnedCounts) {
  const auto k23 = CheckSparse(K23Graph(), 2, 2);
  EXPECT_TRUE(k23->sparse);
  EXPECT_FALSE(k23->tight);
  EXPECT_TRUE(CheckSparse(Graph::Complete(4), 2, 2)->tight);
  EXPECT_FALSE(CheckSparse(Graph::Complete(5), 2, 2)->sparse);
  EXPECT_EQ(*PebbleRank(Graph::Complete(5), 2, 2), 8);
  EXPECT_TRUE(IsRigidComb(Graph::Complete(4)));
  EXPECT_FALSE(IsRigidComb(Graph::Complete(3)));
  EXPECT_TRUE(IsRigidComb(Graph::OnVertices(1, {})));
}

TEST(SparsityTest, ValSet) {
  EXPECT_EQ(*ValSet({0, 1}, 0, 1), 0);
  EXPECT_EQ(*ValSet({0, 2}, 0, 1), 1);
  EXPECT_EQ(*ValSet({0, 1, 2}, 0, 1), 3);
  EXPECT_EQ(*ValSet({0, 1, 2, 3}, 0, 1), 6);
  EXPECT_EQ(*ValSet({2, 3, 4, 5, 6}, 0, 1), 8);
  EXPECT_FALSE(ValSet({0}, 0, 1).ok());
}

TEST(SparsityTest, FamilyValue) {
  CompatibleFamily family{0, 1, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}};
  EXPECT_TRUE(ValidateFamily(family).ok());
  EXPECT_EQ(*ValFamily(family), 5);
  EXPECT_EQ(FamilyCoveredEdges(K23Graph(), family), 6);
  CompatibleFamily missing_v{0, 1, {{0, 2, 3}}};
  EXPECT_FALSE(ValidateFamily(missing_v).ok());
  CompatibleFamily too_small{0, 1, {{0, 1}}};
  EXPECT_FALSE(ValidateFamily(too_small).ok());
  CompatibleFamily repeated{0, 1, {{0, 1, 2}, {0, 1, 2}}};
  EXPECT_FALSE(ValidateFamily(repeated).ok());
}

TEST(UvSparsityTest, K23NeedsTheThreeSetFamily) {
  for (auto check : {IsUvSparse, IsUvSparseBruteForce}) {
    const auto r = check(K23Graph());
    ASSERT_TRUE(r.ok());
    EXPECT_FALSE(r->sparse);
    const auto* f = std::get_if<FamilyWitness>(&r->witness);
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->family.sets.size(), 3u);
    EXPECT_EQ(f->covered, 6);
    EXPECT_EQ(f->value, 5);
    EXPECT_EQ(WitnessToString(r->witness),
              "witness family {0,1,2},{0,1,3},{0,1,4}: covers 6 > val 5");
  }
}

TEST(UvSparsityTest, PinnedGraphs) {
  EXPECT_TRUE(IsUvSparse(TwoK4Graph())->sparse);
  EXPECT_TRUE(IsUvSparse(K4MinusUvGraph())->sparse);
  // The uv edge alone violates val({u,v}) = 0.
  const auto with_uv = IsUvSparse(Graph::OnVertices(2, {{0, 1}}, VertexPair{0, 1}));
  EXPECT_FALSE(with_uv->sparse);
  EXPECT_TRUE(std::holds_alternative<SetWitness>(with_uv->witness));
  // K4 contains the uv edge; without a pair there is nothing to check.
  EXPECT_FALSE(IsUvSparse(*Graph::Complete(4).WithDesignatedPair(0, 1))->sparse);
  EXPECT_FALSE(IsUvSparse(Graph::Complete(4)).ok());
}

TEST(UvSparsityTest, ReducedSearchMatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int max_m = n * (n - 1) / 2;
    const Graph g = RandomGraphWithEdges(n, static_cast<int>(rng() % (max_m + 1)),
                                         rng, VertexPair{0, 1});
    EXPECT_EQ(IsUvSparse(g)->sparse, IsUvSparseBruteForce(g)->sparse)
        << g.DebugString();
  }
}

// uv-sparse edge sets are the independent sets of a matroid: check the
// augmentation axiom on every pair of independent subsets of a few graphs.
TEST(UvSparsityTest, AugmentationAxiom) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 3; ++trial) {
    const Graph g = RandomGraphWithEdges(5, 8, rng, VertexPair{0, 1});
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<char> independent(1u << m);
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> subset;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) subset.push_back(edges[i]);
      independent[mask] =
          IsUvSparse(Graph::OnVertices(5, subset, VertexPair{0, 1}))->sparse;
    }
    for (uint32_t a = 0; a < (1u << m); ++a) {
      if (!independent[a]) continue;
      for (int i = 0; i < m; ++i)
        if (a >> i & 1) EXPECT_TRUE(independent[a & ~(1u << i)]);
      for (uint32_t b = 0; b < (1u << m); ++b) {
        if (!independent[b] || __builtin_popcount(b) <= __builtin_popcount(a))
          continue;
        bool augmented = false;
        for (int i = 0; i < m && !augmented; ++i)
          if ((b >> i & 1) && !(a >> i & 1) && independent[a | 1u << i])
            augmented = true;
        ASSERT_TRUE(augmented) << "a=" << a << " b=" << b;
      }
    }
  }
}

TEST(UvRigidCombTest, PinnedGraphs) {
  EXPECT_TRUE(*IsUvRigidComb(TwoK4Graph()));
  EXPECT_FALSE(*IsUvRigidComb(K23Graph()));
  EXPECT_FALSE(*IsUvRigidComb(K4MinusUvGraph()));
  EXPECT_FALSE(IsUvRigidComb(Graph::Complete(4)).ok());
}

TEST(CoverBoundTest, PinnedGraphs) {
  // Two triangles sharing a vertex.
  const Graph bowtie =
      Graph::OnVertices(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_EQ(CoverRankBound(bowtie)->bound, 6);
  EXPECT_EQ(CoverRankBound(Graph::Complete(4))->bound, 6);
  EXPECT_EQ(CoverRankBound(Graph::Complete(5))->bound, 8);
  EXPECT_EQ(CoverRankBound(Graph::OnVertices(3, {}))->bound, 0);
}

TEST(CoverBoundTest, EqualsPebbleRank) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int max_m = n * (n - 1) / 2;
    const Graph g = RandomGraphWithEdges(n, static_cast<int>(rng() % (max_m + 1)), rng);
    const auto cover = CoverRankBound(g);
    ASSERT_TRUE(cover.ok());
    EXPECT_EQ(cover->bound, *PebbleRank(g, 2, 2)) << g.DebugString();
    // Every edge is covered by some set of the cover.
    for (const Edge& e : g.edges()) {
      bool covered = false;
      for (const auto& set : cover->cover)
        covered |= std::count(set.begin(), set.end(), e.a) &&
                   std::count(set.begin(), set.end(), e.b);
      EXPECT_TRUE(covered);
    }
  }
}

}  // namespace
}  // namespace normrig
