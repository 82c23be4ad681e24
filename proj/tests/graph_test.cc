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
#include "normrig/graph.h"
#include "normrig/graph_io.h"

namespace normrig {
namespace {

TEST(GraphTest, EdgesAreNormalized) {
  const Edge e(5, 2);
  EXPECT_EQ(e.a, 2);
  EXPECT_EQ(e.b, 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_TRUE(e.Touches(5));
  EXPECT_EQ(e.Other(5), 2);
}

TEST(GraphTest, CreateRejectsMalformedInput) {
  EXPECT_FALSE(Graph::Create({0, 1}, {{0, 0}}).ok());
  EXPECT_FALSE(Graph::Create({0, 1}, {{0, 1}, {1, 0}}).ok());
  EXPECT_FALSE(Graph::Create({0, 1}, {{0, 2}}).ok());
  EXPECT_FALSE(Graph::Create({0, 0}, {}).ok());
  EXPECT_FALSE(Graph::Create({-1, 0}, {}).ok());
  EXPECT_FALSE(Graph::Create({0, 1}, {}, VertexPair{1, 1}).ok());
  EXPECT_FALSE(Graph::Create({0, 1}, {}, VertexPair{0, 7}).ok());
  EXPECT_TRUE(Graph::Create({3, 1, 8}, {{1, 8}}, VertexPair{3, 8}).ok());
}

TEST(GraphTest, Queries) {
  const Graph g = *Graph::Create({4, 0, 2}, {{0, 2}, {2, 4}});
  EXPECT_EQ(g.vertices(), (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(g.IndexOf(4), 2);
  EXPECT_EQ(g.IndexOf(3), -1);
  EXPECT_EQ(g.Neighbors(2), (std::vector<Vertex>{0, 4}));
  EXPECT_EQ(g.Degree(0), 1);
  EXPECT_EQ(g.FreshVertex(), 1);
  const std::vector<Vertex> reserved = {1, 3};
  EXPECT_EQ(g.FreshVertex(reserved), 5);
  const std::vector<Vertex> subset = {0, 2};
  EXPECT_EQ(g.InducedEdgeCount(subset), 1);
  EXPECT_TRUE(g.HasEdge(4, 2));
  EXPECT_FALSE(g.HasEdge(0, 4));
}

TEST(GraphTest, CompleteGraph) {
  const Graph k5 = Graph::Complete(5);
  EXPECT_EQ(k5.num_vertices(), 5);
  EXPECT_EQ(k5.num_edges(), 10);
}

TEST(GraphTest, EqualityIgnoresEdgeOrder) {
  const Graph a = Graph::OnVertices(3, {{0, 1}, {1, 2}});
  const Graph b = Graph::OnVertices(3, {{2, 1}, {1, 0}});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, *a.WithDesignatedPair(0, 2));
  EXPECT_EQ(a, a.WithDesignatedPair(0, 2)->WithoutDesignatedPair());
  EXPECT_FALSE(a.WithDesignatedPair(0, 0).ok());
  EXPECT_FALSE(a.WithDesignatedPair(0, 9).ok());
}

TEST(GraphIoTest, ParsesK4) {
  const auto g = ParseGraphText("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(*g, Graph::Complete(4));
}

TEST(GraphIoTest, ParsesDesignatedPair) {
  const auto g = ParseGraphText("5 6 0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->designated_pair(), (VertexPair{0, 1}));
  EXPECT_EQ(*g, K23Graph());
}

TEST(GraphIoTest, AcceptsReversedEdgesAndBlankLines) {
  const auto g = ParseGraphText("\n3 2\n\n1 0\n2 1\n\n");
  ASSERT_TRUE(g.ok());
  EXPECT_TRUE(g->HasEdge(0, 1));
}

TEST(GraphIoTest, RejectsWithLineNumbers) {
  struct Case {
    const char* text;
    const char* message;
  };
  const Case cases[] = {
      {"3 2\n0 1\n1 0\n", "parallel edge at line 3"},
      {"3 1\n1 1\n", "loop at line 2"},
      {"3 1\n0 3\n", "vertex out of range at line 2"},
      {"3 1 1 1\n0 1\n", "designated pair has equal endpoints at line 1"},
      {"3 1\n0 1\n1 2\n", "unexpected content after the edge list at line 3"},
      {"3 2\n0 1\n", "expected 2 edges, found 1"},
      {"3 1\n0 x\n", "bad integer 'x' at line 2"},
      {"3\n", "header must be 'n m [u v]' at line 1"},
      {"", "empty graph file"},
  };
  for (const Case& c : cases) {
    const auto g = ParseGraphText(c.text);
    ASSERT_FALSE(g.ok()) << c.text;
    EXPECT_EQ(g.status().message(), c.message);
  }
}

TEST(GraphIoTest, JsonRoundTrip) {
  const Graph g = TwoK4Graph();
  const auto back = ParseGraph(GraphToJson(g).dump());
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, g);
  EXPECT_FALSE(ParseGraphJson("{\"n\": 2, \"edges\": [[0, 0]]}").ok());
  EXPECT_FALSE(ParseGraphJson("{\"edges\": []}").ok());
  EXPECT_FALSE(ParseGraphJson("[1, 2]").ok());
}

TEST(GraphIoTest, TextRoundTripOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    std::optional<VertexPair> pair;
    if (i % 2) pair = VertexPair{static_cast<int>(rng() % n), 0};
    if (pair && pair->u == 0) pair->u = n - 1;
    const Graph g = RandomGraphWithEdges(n, m, rng, pair);
    const auto back = ParseGraphText(FormatGraphText(g));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, g);
    EXPECT_EQ(FormatGraphText(*back), FormatGraphText(g));
  }
}

TEST(GraphIoTest, FormatRenumbersSparseIds) {
  const Graph g = *Graph::Create({2, 5, 9}, {{5, 9}, {2, 9}}, VertexPair{9, 2});
  EXPECT_EQ(FormatGraphText(g), "3 2 2 0\n1 2\n0 2\n");
}

}  // namespace
}  // namespace normrig
