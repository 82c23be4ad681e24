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

#include "normrig/graph.h"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace normrig {

absl::StatusOr<Graph> Graph::Create(std::vector<Vertex> vertices,
                                    std::vector<Edge> edges,
                                    std::optional<VertexPair> pair) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.pair_ = pair;
  if (absl::Status s = ValidateGraph(g); !s.ok()) return s;
  return g;
}

Graph Graph::OnVertices(int n, std::span<const Edge> edges,
                        std::optional<VertexPair> pair) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  auto g = Create(std::move(vs), std::vector<Edge>(edges.begin(), edges.end()),
                  pair);
  if (!g.ok()) {
    std::cerr << "Graph::OnVertices: " << g.status() << "\n";
    std::abort();
  }
  return *std::move(g);
}

Graph Graph::OnVertices(int n, std::initializer_list<Edge> edges,
                        std::optional<VertexPair> pair) {
  return OnVertices(n, std::span<const Edge>(edges.begin(), edges.size()),
                    pair);
}

Graph Graph::Complete(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return OnVertices(n, edges);
}

bool Graph::HasVertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::HasEdge(Vertex a, Vertex b) const {
  if (a == b) return false;
  const Edge e(a, b);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

int Graph::IndexOf(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Vertex> Graph::Neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_)
    if (e.Touches(v)) out.push_back(e.Other(v));
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::Degree(Vertex v) const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.Touches(v); }));
}

Vertex Graph::FreshVertex() const { return FreshVertex({}); }

Vertex Graph::FreshVertex(std::span<const Vertex> reserved) const {
  for (Vertex candidate = 0;; ++candidate) {
    if (HasVertex(candidate)) continue;
    if (std::find(reserved.begin(), reserved.end(), candidate) !=
        reserved.end())
      continue;
    return candidate;
  }
}

int Graph::InducedEdgeCount(std::span<const Vertex> subset) const {
  std::set<Vertex> in(subset.begin(), subset.end());
  int count = 0;
  for (const Edge& e : edges_)
    if (in.count(e.a) && in.count(e.b)) ++count;
  return count;
}

absl::StatusOr<Graph> Graph::WithDesignatedPair(Vertex u, Vertex v) const {
  Graph g = *this;
  g.pair_ = VertexPair{u, v};
  if (absl::Status s = ValidateGraph(g); !s.ok()) return s;
  return g;
}

Graph Graph::WithoutDesignatedPair() const {
  Graph g = *this;
  g.pair_.reset();
  return g;
}

bool operator==(const Graph& lhs, const Graph& rhs) {
  if (lhs.vertices_ != rhs.vertices_ || lhs.pair_ != rhs.pair_) return false;
  std::vector<Edge> a = lhs.edges_, b = rhs.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string Graph::DebugString() const {
  std::string out = absl::StrCat("V={", absl::StrJoin(vertices_, ","), "} E={");
  for (size_t i = 0; i < edges_.size(); ++i)
    absl::StrAppend(&out, i ? "," : "", edges_[i].a, "-", edges_[i].b);
  absl::StrAppend(&out, "}");
  if (pair_) absl::StrAppend(&out, " uv=(", pair_->u, ",", pair_->v, ")");
  return out;
}

absl::Status ValidateGraph(const Graph& g) {
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0)
      return absl::InvalidArgumentError(
          absl::StrCat("negative vertex id ", vs[i]));
    if (i > 0 && vs[i] == vs[i - 1])
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate vertex ", vs[i]));
  }
  std::set<Edge> seen;
  for (const Edge& e : g.edges()) {
    if (e.a == e.b)
      return absl::InvalidArgumentError(absl::StrCat("loop at vertex ", e.a));
    if (!g.HasVertex(e.a) || !g.HasVertex(e.b))
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e.a, "-", e.b, " has an unknown endpoint"));
    if (!seen.insert(e).second)
      return absl::InvalidArgumentError(
          absl::StrCat("parallel edge ", e.a, "-", e.b));
  }
  if (const auto& p = g.designated_pair()) {
    if (p->u == p->v)
      return absl::InvalidArgumentError(
          "designated pair must have distinct endpoints");
    if (!g.HasVertex(p->u) || !g.HasVertex(p->v))
      return absl::InvalidArgumentError(
          absl::StrCat("designated pair (", p->u, ",", p->v,
                       ") is not in the vertex set"));
  }
  return absl::OkStatus();
}

}  // namespace normrig
