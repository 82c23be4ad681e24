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

// Small-graph streams for exhaustive sweeps. A graph on 0..n-1 (n <= 8) is an
// edge bitmask over the pairs (a, b), a < b, in lexicographic order.

#ifndef NORMRIG_ENUMERATION_H_
#define NORMRIG_ENUMERATION_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "normrig/graph.h"

namespace normrig {

int NumPairs(int n);
int PairIndex(int n, int a, int b);
Graph GraphFromMask(int n, uint32_t mask,
                    std::optional<VertexPair> pair = std::nullopt);
uint32_t MaskFromGraph(const Graph& g);  // g on 0..n-1

// Minimum mask over all vertex permutations (n <= 7).
uint32_t CanonicalMask(int n, uint32_t mask);
// Minimum over permutations mapping {0, 1} onto itself.
uint32_t CanonicalMaskFixingPair(int n, uint32_t mask);

bool IsConnected(const Graph& g);

// One representative per isomorphism class, in increasing canonical mask
// order. n <= 7.
std::vector<Graph> NonIsomorphicGraphs(int n, bool connected_only);
// Graphs with designated pair (0, 1), one per class of (graph, pair) under
// relabelling. Covers every graph with every choice of designated pair.
std::vector<Graph> NonIsomorphicPairedGraphs(int n);

// Uniformly random labelled graph on 0..n-1 with exactly m edges.
Graph RandomGraphWithEdges(int n, int m, std::mt19937_64& rng,
                           std::optional<VertexPair> pair = std::nullopt);
// Random (2,2)-sparse graph: random edge order, greedy pebble-game
// acceptance, stopping at `target_edges` accepted edges.
Graph RandomSparseGraph(int n, int target_edges, std::mt19937_64& rng);
// Random uv-sparse graph with designated pair (0, 1).
Graph RandomUvSparseGraph(int n, int target_edges, std::mt19937_64& rng);

// The uv-tight graph of two K4s meeting in one vertex x = 2, with u = 0 in
// one copy and v = 1 in the other: K4{0,2,3,4} + K4{1,2,5,6}.
Graph TwoK4Graph();
// K_{2,3} with the size-2 side {0, 1} as the designated pair.
Graph K23Graph();
// K4 minus the edge uv, pair (0, 1).
Graph K4MinusUvGraph();

}  // namespace normrig

#endif  // NORMRIG_ENUMERATION_H_
