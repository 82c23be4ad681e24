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

#include "normrig/enumeration.h"

#include <algorithm>
#include <numeric>

#include "normrig/sparsity.h"

namespace normrig {

int NumPairs(int n) { return n * (n - 1) / 2; }

int PairIndex(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  // pairs (0,1)..(0,n-1), (1,2).. in order
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

Graph GraphFromMask(int n, uint32_t mask, std::optional<VertexPair> pair) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> PairIndex(n, a, b) & 1) edges.emplace_back(a, b);
  return Graph::OnVertices(n, edges, pair);
}

uint32_t MaskFromGraph(const Graph& g) {
  const int n = g.num_vertices();
  uint32_t mask = 0;
  for (const Edge& e : g.edges())
    mask |= 1u << PairIndex(n, g.IndexOf(e.a), g.IndexOf(e.b));
  return mask;
}

namespace {

// For each permutation, the image of every pair index.
struct PermutationTable {
  int n = 0;
  std::vector<std::vector<int>> image;

  PermutationTable(int n_in, bool fix_pair) : n(n_in) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (fix_pair && n >= 2 && !((perm[0] == 0 && perm[1] == 1) ||
                                  (perm[0] == 1 && perm[1] == 0)))
        continue;
      std::vector<int> img(NumPairs(n));
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          img[PairIndex(n, a, b)] = PairIndex(n, perm[a], perm[b]);
      image.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  uint32_t Apply(size_t p, uint32_t mask) const {
    uint32_t out = 0;
    for (uint32_t m = mask; m; m &= m - 1)
      out |= 1u << image[p][__builtin_ctz(m)];
    return out;
  }

  uint32_t Canonical(uint32_t mask) const {
    uint32_t best = mask;
    for (size_t p = 0; p < image.size(); ++p) best = std::min(best, Apply(p, mask));
    return best;
  }

  bool IsCanonical(uint32_t mask) const {
    for (size_t p = 0; p < image.size(); ++p)
      if (Apply(p, mask) < mask) return false;
    return true;
  }
};

}  // namespace

uint32_t CanonicalMask(int n, uint32_t mask) {
  return PermutationTable(n, false).Canonical(mask);
}

uint32_t CanonicalMaskFixingPair(int n, uint32_t mask) {
  return PermutationTable(n, true).Canonical(mask);
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (Vertex y : g.Neighbors(g.vertices()[x])) {
      const int iy = g.IndexOf(y);
      if (!seen[iy]) {
        seen[iy] = 1;
        ++count;
        stack.push_back(iy);
      }
    }
  }
  return count == g.num_vertices();
}

std::vector<Graph> NonIsomorphicGraphs(int n, bool connected_only) {
  const PermutationTable table(n, false);
  std::vector<Graph> out;
  const uint32_t limit = uint32_t{1} << NumPairs(n);
  for (uint32_t mask = 0; mask < limit; ++mask) {
    if (!table.IsCanonical(mask)) continue;
    Graph g = GraphFromMask(n, mask);
    if (connected_only && !IsConnected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> NonIsomorphicPairedGraphs(int n) {
  const PermutationTable table(n, true);
  std::vector<Graph> out;
  const uint32_t limit = uint32_t{1} << NumPairs(n);
  for (uint32_t mask = 0; mask < limit; ++mask)
    if (table.IsCanonical(mask))
      out.push_back(GraphFromMask(n, mask, VertexPair{0, 1}));
  return out;
}

Graph RandomGraphWithEdges(int n, int m, std::mt19937_64& rng,
                           std::optional<VertexPair> pair) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<size_t>(all.size(), std::max(0, m)));
  return Graph::OnVertices(n, all, pair);
}

Graph RandomSparseGraph(int n, int target_edges, std::mt19937_64& rng) {
  std::vector<Edge> all, kept;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  PebbleGame game(n, 2, 2);
  for (const Edge& e : all) {
    if (static_cast<int>(kept.size()) >= target_edges) break;
    if (game.TryAddEdge(e.a, e.b)) kept.push_back(e);
  }
  return Graph::OnVertices(n, kept);
}

Graph RandomUvSparseGraph(int n, int target_edges, std::mt19937_64& rng) {
  std::vector<Edge> all, kept;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!(a == 0 && b == 1)) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  const VertexPair pair{0, 1};
  for (const Edge& e : all) {
    if (static_cast<int>(kept.size()) >= target_edges) break;
    kept.push_back(e);
    if (!IsUvSparse(Graph::OnVertices(n, kept, pair))->sparse) kept.pop_back();
  }
  return Graph::OnVertices(n, kept, pair);
}

Graph TwoK4Graph() {
  return Graph::OnVertices(7,
                           {{0, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}, {3, 4},
                            {1, 2}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {5, 6}},
                           VertexPair{0, 1});
}

Graph K23Graph() {
  return Graph::OnVertices(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}},
                           VertexPair{0, 1});
}

Graph K4MinusUvGraph() {
  return Graph::OnVertices(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                           VertexPair{0, 1});
}

}  // namespace normrig
