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

// Independent oracles shared by the unit tests.

#ifndef NORMRIG_TESTS_TEST_UTIL_H_
#define NORMRIG_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "normrig/enumeration.h"
#include "normrig/graph.h"

namespace normrig::testing {

// Largest (k,l)-sparse edge subset by exhaustive search over edge subsets.
// Small graphs only.
inline bool IsSparseBySubsets(const Graph& g, const std::vector<Edge>& edges,
                              int k, int l) {
  const int n = g.num_vertices();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> set;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) set.push_back(g.vertices()[i]);
    int count = 0;
    for (const Edge& e : edges)
      count += std::count(set.begin(), set.end(), e.a) &&
               std::count(set.begin(), set.end(), e.b);
    if (count > 0 && count > k * static_cast<int>(set.size()) - l) return false;
  }
  return true;
}

inline int SparseRankBySubsets(const Graph& g, int k, int l) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::vector<Edge> subset;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(edges[i]);
    if (IsSparseBySubsets(g, subset, k, l)) best = size;
  }
  return best;
}

// Relabels g onto 0..n-1 in vertex order; the pair follows.
inline Graph Compact(const Graph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(g.IndexOf(e.a), g.IndexOf(e.b));
  std::optional<VertexPair> pair;
  if (const auto& p = g.designated_pair())
    pair = VertexPair{g.IndexOf(p->u), g.IndexOf(p->v)};
  return Graph::OnVertices(g.num_vertices(), edges, pair);
}

inline bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  const int n = a.num_vertices();
  return CanonicalMask(n, MaskFromGraph(Compact(a))) ==
         CanonicalMask(n, MaskFromGraph(Compact(b)));
}

}  // namespace normrig::testing

#endif  // NORMRIG_TESTS_TEST_UTIL_H_
