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

// Graph construction moves. Every function is pure: the input graph is left
// untouched and the result is validated before it is returned. Precondition
// failures come back as InvalidArgument / FailedPrecondition statuses whose
// message names the violated condition.

#ifndef NORMRIG_OPERATIONS_H_
#define NORMRIG_OPERATIONS_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "normrig/graph.h"

namespace normrig {

struct ZeroExt {
  Vertex a, b, z;
};
struct OneExt {
  Vertex a, b, c, z;
};
// Old neighbours x of w other than v1, v2 map to w or w2 (the fresh copy).
struct VertexToFourCycle {
  Vertex w, w2, v1, v2;
  std::map<Vertex, Vertex> reassignment;
};
// `h` already lives in the host's id space: V(h) and V(G) meet in {w}.
struct VertexToH {
  Vertex w;
  Graph h;
  std::map<Vertex, Vertex> reassignment;  // x -> y in V(h), one per edge xw
};
struct GeneralizedVertexSplit {
  Vertex z;
  std::vector<Vertex> n_u, n_v;
  Vertex u, v, w;
};
struct AddEdge {
  Vertex a, b;
};
struct AddVertexWithNeighbors {
  Vertex z;
  std::vector<Vertex> neighbors;
};

using ConstructionStep =
    std::variant<ZeroExt, OneExt, VertexToFourCycle, VertexToH,
                 GeneralizedVertexSplit, AddEdge, AddVertexWithNeighbors>;

// Adds z joined to a and b.
absl::StatusOr<Graph> ZeroExtension(const Graph& g, Vertex a, Vertex b,
                                    Vertex z);
// Deletes ab and adds z joined to a, b and c.
absl::StatusOr<Graph> OneExtension(const Graph& g, Vertex a, Vertex b,
                                   Vertex c, Vertex z);
absl::StatusOr<Graph> VertexToFourCycleMove(
    const Graph& g, Vertex w, Vertex w2, Vertex v1, Vertex v2,
    const std::map<Vertex, Vertex>& reassignment);
// Requires h to be (2,2)-tight, or uv-tight when h carries a designated pair.
absl::StatusOr<Graph> VertexToHMove(const Graph& g, Vertex w, const Graph& h,
                                    const std::map<Vertex, Vertex>& reassignment);
// Deletes z, adds u joined to n_u and v joined to n_v, then adds uv and uw.
// u and v may reuse z's identifier. The result carries (u, v) as its
// designated pair.
absl::StatusOr<Graph> GeneralizedVertexSplitMove(
    const Graph& g, Vertex z, const std::vector<Vertex>& n_u,
    const std::vector<Vertex>& n_v, Vertex u, Vertex v, Vertex w);
// Vertex contraction G/uv (u, v need not be adjacent). The merged vertex takes
// the smallest id unused by V \ {u, v}; parallel edges merge and the uv loop
// is dropped. The designated pair is dropped.
absl::StatusOr<Graph> ContractPair(const Graph& g, Vertex u, Vertex v);

absl::StatusOr<Graph> DeleteEdge(const Graph& g, Vertex a, Vertex b);
absl::StatusOr<Graph> DeleteVertex(const Graph& g, Vertex x);
absl::StatusOr<Graph> InducedSubgraph(const Graph& g,
                                      const std::vector<Vertex>& subset);
absl::StatusOr<Graph> AddEdgeMove(const Graph& g, Vertex a, Vertex b);
absl::StatusOr<Graph> AddVertexWithNeighborsMove(
    const Graph& g, Vertex z, const std::vector<Vertex>& neighbors);

// G - uv when uv is an edge, otherwise G itself.
Graph WithoutEdge(const Graph& g, Vertex a, Vertex b);

absl::StatusOr<Graph> ApplyStep(const Graph& g, const ConstructionStep& step);

// Relabels `h` so that `h_w` becomes `w` and every other vertex of h takes a
// fresh id of `host` (smallest first, in h's vertex order). `mapping` receives
// the old -> new id map.
Graph EmbedAttachedGraph(const Graph& host, Vertex w, const Graph& h,
                         Vertex h_w, std::map<Vertex, Vertex>* mapping);

// Short human readable form, matching the step syntax of sequence files.
std::string StepToString(const ConstructionStep& step);

// Parses the StepToString syntax:
//   zeroext a b -> z
//   oneext a b c -> z
//   fourcycle w v1 v2 | x1 x2 ... -> w2   (neighbours moved to w2)
//   split z | Nu... | Nv... | w -> u v
//   addedge a b
//   addvertex z: n1 n2 ...
// A fourcycle step lists only the moved neighbours; CompleteFourCycle fills
// in the rest against a graph. vertextoh has no text form.
absl::StatusOr<ConstructionStep> ParseStep(absl::string_view text);
VertexToFourCycle CompleteFourCycle(const Graph& g, VertexToFourCycle step);

}  // namespace normrig

#endif  // NORMRIG_OPERATIONS_H_
