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

// Combinatorial side of rigidity in normed planes: (k,l)-count matroids via
// the pebble game, the coincident-pair (uv) count matroid, and the cover
// formula for the (2,2) rank.

#ifndef NORMRIG_SPARSITY_H_
#define NORMRIG_SPARSITY_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "normrig/graph.h"

namespace normrig {

// (k,l) pebble game on vertices 0..n-1. Edges are offered one at a time and
// accepted iff the accepted set stays (k,l)-sparse. Valid for 0 <= l < 2k.
class PebbleGame {
 public:
  PebbleGame(int num_vertices, int k, int l);

  // Returns true and keeps the edge if it is independent of the accepted
  // set; otherwise returns false and records the rejection witness.
  bool TryAddEdge(int a, int b);

  int num_accepted() const { return accepted_; }
  int pebbles(int x) const { return pebbles_[x]; }
  int out_degree(int x) const { return static_cast<int>(out_[x].size()); }
  // Vertex set spanning a tight block that blocks the last rejected edge.
  const std::vector<int>& last_rejection_set() const { return rejection_set_; }

 private:
  bool Gather(int root, int held);
  std::vector<int> ReachFrom(int a, int b) const;

  int k_, l_;
  int accepted_ = 0;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;  // orientation of accepted edges
  std::vector<int> rejection_set_;
};

struct SparsityReport {
  int rank = 0;          // size of a maximum (k,l)-sparse edge subset
  bool sparse = false;   // rank == |E|
  bool tight = false;    // sparse and |E| == k|V| - l
  // First rejected edge and a vertex set U it lies in with i_G(U) > k|U| - l.
  std::optional<Edge> rejected_edge;
  std::vector<Vertex> violating_set;
  int violating_count = 0;
  int violating_bound = 0;
};

absl::StatusOr<SparsityReport> CheckSparse(const Graph& g, int k, int l);
absl::StatusOr<int> PebbleRank(const Graph& g, int k, int l);

// Rigid in a normed plane iff the graph spans a (2,2)-tight subgraph.
// Graphs with at most one vertex are rigid by convention.
bool IsRigidComb(const Graph& g);

// val(U) = 2|U| - t_U with t_U = 4 for U = {u,v}, 3 for other sets of size
// 2 or 3, and 2 otherwise. Requires |U| >= 2.
absl::StatusOr<int> ValSet(const std::vector<Vertex>& subset, Vertex u,
                           Vertex v);

// A uv-compatible family: distinct sets, each containing u and v, each of
// size at least 3.
struct CompatibleFamily {
  Vertex u = 0, v = 0;
  std::vector<std::vector<Vertex>> sets;
};

absl::Status ValidateFamily(const CompatibleFamily& family);
// sum val(X_i) - 2(k - 1).
absl::StatusOr<int> ValFamily(const CompatibleFamily& family);
// |union of E(G[X_i])|.
int FamilyCoveredEdges(const Graph& g, const CompatibleFamily& family);

struct SetWitness {
  std::vector<Vertex> set;
  int covered = 0;
  int value = 0;
};
struct FamilyWitness {
  CompatibleFamily family;
  int covered = 0;
  int value = 0;
};
using UvWitness = std::variant<std::monostate, SetWitness, FamilyWitness>;

struct UvSparsityResult {
  bool sparse = false;
  UvWitness witness;  // set when !sparse
};

// Exhaustive check over every subset and every uv-compatible family. Guarded
// to |V| <= 7.
absl::StatusOr<UvSparsityResult> IsUvSparseBruteForce(const Graph& g);

// Same verdict, searching only families {u,v} + C_i with C_i pairwise
// disjoint and each connected in G - u - v. Exponential in |V| - 2.
absl::StatusOr<UvSparsityResult> IsUvSparse(const Graph& g);

// G - uv and G/uv both rigid.
absl::StatusOr<bool> IsUvRigidComb(const Graph& g);

struct CoverResult {
  int bound = 0;
  std::vector<std::vector<Vertex>> cover;
};

// min over covers Y of E (|Y_i| >= 2, |Y_i cap Y_j| <= 1) of
// sum 2|Y_i| - 2 - [|Y_i| == 2]. Guarded to |V| <= 8.
absl::StatusOr<CoverResult> CoverRankBound(const Graph& g);

// "{0,1,2},{0,1,3}: covers 6 > val 5" style rendering.
std::string WitnessToString(const UvWitness& witness);

}  // namespace normrig

#endif  // NORMRIG_SPARSITY_H_
