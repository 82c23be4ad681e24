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

#ifndef NORMRIG_GRAPH_H_
#define NORMRIG_GRAPH_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace normrig {

// Vertex identifiers are small non-negative integers. Fresh vertices always
// take the smallest identifier not currently in use.
using Vertex = int;

// Undirected edge, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool Touches(Vertex v) const { return a == v || b == v; }
  Vertex Other(Vertex v) const { return v == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

// A simple undirected graph with an optional designated vertex pair (u, v).
//
// Graphs are immutable values. Every mutating operation lives in
// operations.h and returns a new graph. Vertices are kept sorted; edges keep
// insertion order, which is the order the pebble game consumes them in.
class Graph {
 public:
  Graph() = default;

  // Validating constructor: rejects loops, parallel edges, unknown endpoints,
  // duplicate vertices, negative ids and a degenerate designated pair.
  static absl::StatusOr<Graph> Create(std::vector<Vertex> vertices,
                                      std::vector<Edge> edges,
                                      std::optional<VertexPair> pair = {});

  // Graph on vertices 0..n-1. Aborts on invalid input; intended for literals
  // in code and tests. Use Create() for anything user supplied.
  static Graph OnVertices(int n, std::span<const Edge> edges,
                          std::optional<VertexPair> pair = {});
  static Graph OnVertices(int n, std::initializer_list<Edge> edges,
                          std::optional<VertexPair> pair = {});
  static Graph Complete(int n);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<VertexPair>& designated_pair() const { return pair_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool HasVertex(Vertex v) const;
  bool HasEdge(Vertex a, Vertex b) const;
  // Position of v in vertices(), or -1.
  int IndexOf(Vertex v) const;
  // Sorted neighbour list.
  std::vector<Vertex> Neighbors(Vertex v) const;
  int Degree(Vertex v) const;
  // Smallest non-negative id not in the vertex set.
  Vertex FreshVertex() const;
  // Smallest id not in the vertex set and not in `reserved`.
  Vertex FreshVertex(std::span<const Vertex> reserved) const;

  // Number of edges with both endpoints in `subset`.
  int InducedEdgeCount(std::span<const Vertex> subset) const;

  absl::StatusOr<Graph> WithDesignatedPair(Vertex u, Vertex v) const;
  Graph WithoutDesignatedPair() const;

  // Structural equality: same vertex set, same edge set (order ignored), same
  // designated pair.
  friend bool operator==(const Graph& lhs, const Graph& rhs);

  std::string DebugString() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<VertexPair> pair_;
};

// Checks every Graph invariant. Operations run this on their outputs.
absl::Status ValidateGraph(const Graph& g);

}  // namespace normrig

#endif  // NORMRIG_GRAPH_H_
