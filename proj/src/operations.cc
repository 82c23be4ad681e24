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

#include "normrig/operations.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "absl/strings/string_view.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "normrig/sparsity.h"

namespace normrig {
namespace {

absl::Status Reject(absl::string_view op, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat(op, ": ", what));
}

absl::Status RequireVertex(const Graph& g, Vertex x, absl::string_view op,
                           absl::string_view name) {
  if (!g.HasVertex(x))
    return Reject(op, absl::StrCat(name, "=", x, " is not a vertex"));
  return absl::OkStatus();
}

absl::Status RequireFresh(const Graph& g, Vertex x, absl::string_view op,
                          absl::string_view name) {
  if (x < 0) return Reject(op, absl::StrCat(name, "=", x, " is negative"));
  if (g.HasVertex(x))
    return Reject(op, absl::StrCat(name, "=", x, " is already a vertex"));
  return absl::OkStatus();
}

// Keeps the designated pair only if both endpoints survive.
std::optional<VertexPair> SurvivingPair(const Graph& g,
                                        const std::vector<Vertex>& vertices) {
  const auto& p = g.designated_pair();
  if (!p) return std::nullopt;
  auto has = [&](Vertex x) {
    return std::find(vertices.begin(), vertices.end(), x) != vertices.end();
  };
  if (has(p->u) && has(p->v)) return p;
  return std::nullopt;
}

std::vector<Edge> EdgesAvoiding(const Graph& g, Vertex x) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (!e.Touches(x)) out.push_back(e);
  return out;
}

std::vector<Vertex> VerticesWithout(const Graph& g, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex y : g.vertices())
    if (y != x) out.push_back(y);
  return out;
}

}  // namespace

absl::StatusOr<Graph> ZeroExtension(const Graph& g, Vertex a, Vertex b,
                                    Vertex z) {
  constexpr absl::string_view kOp = "zero_extension";
  if (a == b) return Reject(kOp, "a == b");
  if (auto s = RequireVertex(g, a, kOp, "a"); !s.ok()) return s;
  if (auto s = RequireVertex(g, b, kOp, "b"); !s.ok()) return s;
  if (auto s = RequireFresh(g, z, kOp, "z"); !s.ok()) return s;
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(z);
  std::vector<Edge> es = g.edges();
  es.emplace_back(z, a);
  es.emplace_back(z, b);
  return Graph::Create(std::move(vs), std::move(es), g.designated_pair());
}

absl::StatusOr<Graph> OneExtension(const Graph& g, Vertex a, Vertex b,
                                   Vertex c, Vertex z) {
  constexpr absl::string_view kOp = "one_extension";
  if (!g.HasEdge(a, b))
    return Reject(kOp, absl::StrCat("edge ", a, "-", b, " is missing"));
  if (auto s = RequireVertex(g, c, kOp, "c"); !s.ok()) return s;
  if (c == a || c == b) return Reject(kOp, "c must differ from a and b");
  if (auto s = RequireFresh(g, z, kOp, "z"); !s.ok()) return s;
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(z);
  std::vector<Edge> es;
  const Edge removed(a, b);
  for (const Edge& e : g.edges())
    if (e != removed) es.push_back(e);
  es.emplace_back(z, a);
  es.emplace_back(z, b);
  es.emplace_back(z, c);
  return Graph::Create(std::move(vs), std::move(es), g.designated_pair());
}

absl::StatusOr<Graph> VertexToFourCycleMove(
    const Graph& g, Vertex w, Vertex w2, Vertex v1, Vertex v2,
    const std::map<Vertex, Vertex>& reassignment) {
  constexpr absl::string_view kOp = "vertex_to_four_cycle";
  if (auto s = RequireVertex(g, w, kOp, "w"); !s.ok()) return s;
  if (auto s = RequireFresh(g, w2, kOp, "w'"); !s.ok()) return s;
  if (v1 == v2) return Reject(kOp, "v1 == v2");
  const std::vector<Vertex> nbrs = g.Neighbors(w);
  if (nbrs.size() < 2) return Reject(kOp, "deg(w) < 2");
  auto is_nbr = [&](Vertex x) {
    return std::binary_search(nbrs.begin(), nbrs.end(), x);
  };
  if (!is_nbr(v1)) return Reject(kOp, "v1 is not a neighbour of w");
  if (!is_nbr(v2)) return Reject(kOp, "v2 is not a neighbour of w");
  for (const auto& [x, target] : reassignment) {
    if (x == v1 || x == v2)
      return Reject(kOp, "reassignment must not mention v1 or v2");
    if (!is_nbr(x))
      return Reject(kOp, absl::StrCat("reassigned vertex ", x,
                                      " is not a neighbour of w"));
    if (target != w && target != w2)
      return Reject(kOp, absl::StrCat("reassignment target ", target,
                                      " is neither w nor w'"));
  }
  for (Vertex x : nbrs) {
    if (x == v1 || x == v2) continue;
    if (!reassignment.count(x))
      return Reject(kOp, absl::StrCat("incomplete reassignment: edge ", x,
                                      "-", w, " has no target"));
  }
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(w2);
  std::vector<Edge> es = EdgesAvoiding(g, w);
  es.emplace_back(w, v1);
  es.emplace_back(w2, v1);
  es.emplace_back(w, v2);
  es.emplace_back(w2, v2);
  for (const auto& [x, target] : reassignment) es.emplace_back(x, target);
  return Graph::Create(std::move(vs), std::move(es), g.designated_pair());
}

absl::StatusOr<Graph> VertexToHMove(
    const Graph& g, Vertex w, const Graph& h,
    const std::map<Vertex, Vertex>& reassignment) {
  constexpr absl::string_view kOp = "vertex_to_h";
  if (auto s = RequireVertex(g, w, kOp, "w"); !s.ok()) return s;
  for (Vertex y : h.vertices()) {
    if (y == w) continue;
    if (g.HasVertex(y))
      return Reject(kOp, absl::StrCat("H shares vertex ", y,
                                      " with G besides w"));
  }
  if (!h.HasVertex(w)) return Reject(kOp, "H does not contain w");

  if (h.designated_pair()) {
    auto uv = IsUvSparse(h);
    if (!uv.ok()) return uv.status();
    if (!uv->sparse || h.num_edges() != 2 * h.num_vertices() - 2)
      return Reject(kOp, "H is not uv-tight");
  } else {
    auto rep = CheckSparse(h, 2, 2);
    if (!rep.ok()) return rep.status();
    if (!rep->tight) return Reject(kOp, "H is not (2,2)-tight");
  }

  const std::vector<Vertex> nbrs = g.Neighbors(w);
  for (Vertex x : nbrs) {
    auto it = reassignment.find(x);
    if (it == reassignment.end())
      return Reject(kOp, absl::StrCat("incomplete reassignment: edge ", x,
                                      "-", w, " has no target"));
    if (!h.HasVertex(it->second))
      return Reject(kOp, absl::StrCat("reassignment target ", it->second,
                                      " is not a vertex of H"));
  }
  for (const auto& [x, y] : reassignment)
    if (!std::binary_search(nbrs.begin(), nbrs.end(), x))
      return Reject(kOp, absl::StrCat("reassigned vertex ", x,
                                      " is not a neighbour of w"));

  std::vector<Vertex> vs = VerticesWithout(g, w);
  vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
  std::vector<Edge> es = EdgesAvoiding(g, w);
  es.insert(es.end(), h.edges().begin(), h.edges().end());
  std::set<Edge> present(es.begin(), es.end());
  for (const auto& [x, y] : reassignment) {
    if (!present.insert(Edge(x, y)).second)
      return Reject(kOp, absl::StrCat("reassignment creates parallel edge ",
                                      x, "-", y));
    es.emplace_back(x, y);
  }
  std::optional<VertexPair> pair = g.designated_pair();
  if (!pair) pair = h.designated_pair();
  return Graph::Create(std::move(vs), std::move(es), pair);
}

absl::StatusOr<Graph> GeneralizedVertexSplitMove(
    const Graph& g, Vertex z, const std::vector<Vertex>& n_u,
    const std::vector<Vertex>& n_v, Vertex u, Vertex v, Vertex w) {
  constexpr absl::string_view kOp = "generalized_vertex_split";
  if (auto s = RequireVertex(g, z, kOp, "z"); !s.ok()) return s;
  if (u == v) return Reject(kOp, "u == v");
  for (auto [x, name] : {std::pair{u, "u"}, std::pair{v, "v"}}) {
    if (x < 0) return Reject(kOp, absl::StrCat(name, " is negative"));
    if (x != z && g.HasVertex(x))
      return Reject(kOp, absl::StrCat(name, "=", x,
                                      " is already a vertex other than z"));
  }
  const std::vector<Vertex> nbrs = g.Neighbors(z);
  std::vector<Vertex> parts = n_u;
  parts.insert(parts.end(), n_v.begin(), n_v.end());
  std::sort(parts.begin(), parts.end());
  if (parts != nbrs)
    return Reject(kOp, "N_u, N_v is not a partition of the neighbours of z");
  if (w == z) return Reject(kOp, "w == z");
  if (!g.HasVertex(w)) return Reject(kOp, "w is not a vertex");
  if (std::find(n_u.begin(), n_u.end(), w) != n_u.end())
    return Reject(kOp, "w must lie in V \\ N_u");

  std::vector<Vertex> vs = VerticesWithout(g, z);
  vs.push_back(u);
  vs.push_back(v);
  std::vector<Edge> es = EdgesAvoiding(g, z);
  for (Vertex x : n_u) es.emplace_back(u, x);
  for (Vertex x : n_v) es.emplace_back(v, x);
  es.emplace_back(u, v);
  es.emplace_back(u, w);
  return Graph::Create(std::move(vs), std::move(es), VertexPair{u, v});
}

absl::StatusOr<Graph> ContractPair(const Graph& g, Vertex u, Vertex v) {
  constexpr absl::string_view kOp = "contract_pair";
  if (u == v) return Reject(kOp, "u == v");
  if (auto s = RequireVertex(g, u, kOp, "u"); !s.ok()) return s;
  if (auto s = RequireVertex(g, v, kOp, "v"); !s.ok()) return s;
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices())
    if (x != u && x != v) vs.push_back(x);
  Vertex z = 0;
  while (std::binary_search(vs.begin(), vs.end(), z)) ++z;
  std::vector<Edge> es;
  std::set<Edge> present;
  for (const Edge& e : g.edges()) {
    Vertex a = (e.a == u || e.a == v) ? z : e.a;
    Vertex b = (e.b == u || e.b == v) ? z : e.b;
    if (a == b) continue;
    Edge mapped(a, b);
    if (present.insert(mapped).second) es.push_back(mapped);
  }
  vs.push_back(z);
  return Graph::Create(std::move(vs), std::move(es));
}

absl::StatusOr<Graph> DeleteEdge(const Graph& g, Vertex a, Vertex b) {
  if (!g.HasEdge(a, b))
    return absl::NotFoundError(
        absl::StrCat("delete_edge: edge ", a, "-", b, " is missing"));
  return WithoutEdge(g, a, b);
}

Graph WithoutEdge(const Graph& g, Vertex a, Vertex b) {
  const Edge target(a, b);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (e != target) es.push_back(e);
  return *Graph::Create(g.vertices(), std::move(es), g.designated_pair());
}

absl::StatusOr<Graph> DeleteVertex(const Graph& g, Vertex x) {
  if (!g.HasVertex(x))
    return absl::NotFoundError(
        absl::StrCat("delete_vertex: ", x, " is not a vertex"));
  std::vector<Vertex> vs = VerticesWithout(g, x);
  auto pair = SurvivingPair(g, vs);
  return Graph::Create(std::move(vs), EdgesAvoiding(g, x), pair);
}

absl::StatusOr<Graph> InducedSubgraph(const Graph& g,
                                      const std::vector<Vertex>& subset) {
  std::set<Vertex> keep(subset.begin(), subset.end());
  for (Vertex x : keep)
    if (!g.HasVertex(x))
      return absl::NotFoundError(
          absl::StrCat("induced_subgraph: ", x, " is not a vertex"));
  std::vector<Vertex> vs(keep.begin(), keep.end());
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (keep.count(e.a) && keep.count(e.b)) es.push_back(e);
  auto pair = SurvivingPair(g, vs);
  return Graph::Create(std::move(vs), std::move(es), pair);
}

absl::StatusOr<Graph> AddEdgeMove(const Graph& g, Vertex a, Vertex b) {
  constexpr absl::string_view kOp = "add_edge";
  if (a == b) return Reject(kOp, "a == b");
  if (auto s = RequireVertex(g, a, kOp, "a"); !s.ok()) return s;
  if (auto s = RequireVertex(g, b, kOp, "b"); !s.ok()) return s;
  if (g.HasEdge(a, b))
    return Reject(kOp, absl::StrCat("edge ", a, "-", b, " already present"));
  std::vector<Edge> es = g.edges();
  es.emplace_back(a, b);
  return Graph::Create(g.vertices(), std::move(es), g.designated_pair());
}

absl::StatusOr<Graph> AddVertexWithNeighborsMove(
    const Graph& g, Vertex z, const std::vector<Vertex>& neighbors) {
  constexpr absl::string_view kOp = "add_vertex";
  if (auto s = RequireFresh(g, z, kOp, "z"); !s.ok()) return s;
  std::set<Vertex> seen;
  for (Vertex x : neighbors) {
    if (auto s = RequireVertex(g, x, kOp, "neighbour"); !s.ok()) return s;
    if (!seen.insert(x).second)
      return Reject(kOp, absl::StrCat("neighbour ", x, " listed twice"));
  }
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(z);
  std::vector<Edge> es = g.edges();
  for (Vertex x : neighbors) es.emplace_back(z, x);
  return Graph::Create(std::move(vs), std::move(es), g.designated_pair());
}

absl::StatusOr<Graph> ApplyStep(const Graph& g, const ConstructionStep& step) {
  struct Visitor {
    const Graph& g;
    absl::StatusOr<Graph> operator()(const ZeroExt& s) const {
      return ZeroExtension(g, s.a, s.b, s.z);
    }
    absl::StatusOr<Graph> operator()(const OneExt& s) const {
      return OneExtension(g, s.a, s.b, s.c, s.z);
    }
    absl::StatusOr<Graph> operator()(const VertexToFourCycle& s) const {
      return VertexToFourCycleMove(g, s.w, s.w2, s.v1, s.v2, s.reassignment);
    }
    absl::StatusOr<Graph> operator()(const VertexToH& s) const {
      return VertexToHMove(g, s.w, s.h, s.reassignment);
    }
    absl::StatusOr<Graph> operator()(const GeneralizedVertexSplit& s) const {
      return GeneralizedVertexSplitMove(g, s.z, s.n_u, s.n_v, s.u, s.v, s.w);
    }
    absl::StatusOr<Graph> operator()(const AddEdge& s) const {
      return AddEdgeMove(g, s.a, s.b);
    }
    absl::StatusOr<Graph> operator()(const AddVertexWithNeighbors& s) const {
      return AddVertexWithNeighborsMove(g, s.z, s.neighbors);
    }
  };
  return std::visit(Visitor{g}, step);
}

Graph EmbedAttachedGraph(const Graph& host, Vertex w, const Graph& h,
                         Vertex h_w, std::map<Vertex, Vertex>* mapping) {
  std::map<Vertex, Vertex> m;
  std::vector<Vertex> taken;
  for (Vertex x : h.vertices()) {
    if (x == h_w) {
      m[x] = w;
      continue;
    }
    const Vertex fresh = host.FreshVertex(taken);
    taken.push_back(fresh);
    m[x] = fresh;
  }
  std::vector<Vertex> vs;
  for (const auto& [old_id, new_id] : m) vs.push_back(new_id);
  std::vector<Edge> es;
  for (const Edge& e : h.edges()) es.emplace_back(m[e.a], m[e.b]);
  std::optional<VertexPair> pair;
  if (const auto& p = h.designated_pair()) pair = VertexPair{m[p->u], m[p->v]};
  if (mapping) *mapping = m;
  return *Graph::Create(std::move(vs), std::move(es), pair);
}

std::string StepToString(const ConstructionStep& step) {
  struct Visitor {
    std::string operator()(const ZeroExt& s) const {
      return absl::StrCat("zeroext ", s.a, " ", s.b, " -> ", s.z);
    }
    std::string operator()(const OneExt& s) const {
      return absl::StrCat("oneext ", s.a, " ", s.b, " ", s.c, " -> ", s.z);
    }
    std::string operator()(const VertexToFourCycle& s) const {
      std::vector<Vertex> moved;
      for (const auto& [x, t] : s.reassignment)
        if (t == s.w2) moved.push_back(x);
      return absl::StrCat("fourcycle ", s.w, " ", s.v1, " ", s.v2, " | ",
                          absl::StrJoin(moved, " "), " -> ", s.w2);
    }
    std::string operator()(const VertexToH& s) const {
      std::vector<std::string> parts;
      for (const auto& [x, y] : s.reassignment)
        parts.push_back(absl::StrCat(x, ":", y));
      return absl::StrCat("vertextoh ", s.w, " | ", absl::StrJoin(parts, " "),
                          " [H ", s.h.DebugString(), "]");
    }
    std::string operator()(const GeneralizedVertexSplit& s) const {
      return absl::StrCat("split ", s.z, " | ", absl::StrJoin(s.n_u, " "),
                          " | ", absl::StrJoin(s.n_v, " "), " | ", s.w,
                          " -> ", s.u, " ", s.v);
    }
    std::string operator()(const AddEdge& s) const {
      return absl::StrCat("addedge ", s.a, " ", s.b);
    }
    std::string operator()(const AddVertexWithNeighbors& s) const {
      return absl::StrCat("addvertex ", s.z, ": ",
                          absl::StrJoin(s.neighbors, " "));
    }
  };
  return std::visit(Visitor{}, step);
}

namespace {

absl::StatusOr<std::vector<Vertex>> ParseVertexList(absl::string_view text) {
  std::vector<Vertex> out;
  for (absl::string_view tok :
       absl::StrSplit(text, absl::ByAnyChar(" \t,"), absl::SkipWhitespace())) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      return absl::InvalidArgumentError(absl::StrCat("bad vertex '", tok, "'"));
    out.push_back(value);
  }
  return out;
}

// Splits "lhs -> rhs" and parses both sides.
absl::Status ParseArrow(absl::string_view text, std::vector<Vertex>* lhs,
                        std::vector<Vertex>* rhs) {
  std::vector<absl::string_view> sides = absl::StrSplit(text, "->");
  if (sides.size() != 2) return absl::InvalidArgumentError("missing '->'");
  auto l = ParseVertexList(sides[0]);
  if (!l.ok()) return l.status();
  auto r = ParseVertexList(sides[1]);
  if (!r.ok()) return r.status();
  *lhs = *std::move(l);
  *rhs = *std::move(r);
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<ConstructionStep> ParseStep(absl::string_view text) {
  absl::string_view rest = absl::StripAsciiWhitespace(text);
  const std::string original(rest);
  std::vector<Vertex> lhs, rhs;
  if (absl::ConsumePrefix(&rest, "zeroext ")) {
    if (auto s = ParseArrow(rest, &lhs, &rhs); !s.ok()) return s;
    if (lhs.size() != 2 || rhs.size() != 1)
      return absl::InvalidArgumentError("zeroext needs 'a b -> z'");
    return ZeroExt{lhs[0], lhs[1], rhs[0]};
  }
  if (absl::ConsumePrefix(&rest, "oneext ")) {
    if (auto s = ParseArrow(rest, &lhs, &rhs); !s.ok()) return s;
    if (lhs.size() != 3 || rhs.size() != 1)
      return absl::InvalidArgumentError("oneext needs 'a b c -> z'");
    return OneExt{lhs[0], lhs[1], lhs[2], rhs[0]};
  }
  if (absl::ConsumePrefix(&rest, "fourcycle ")) {
    std::vector<absl::string_view> parts = absl::StrSplit(rest, '|');
    if (parts.size() != 2)
      return absl::InvalidArgumentError(
          "fourcycle needs 'w v1 v2 | moved -> w2'");
    auto head = ParseVertexList(parts[0]);
    if (!head.ok()) return head.status();
    if (auto s = ParseArrow(parts[1], &lhs, &rhs); !s.ok()) return s;
    if (head->size() != 3 || rhs.size() != 1)
      return absl::InvalidArgumentError(
          "fourcycle needs 'w v1 v2 | moved -> w2'");
    VertexToFourCycle step{(*head)[0], rhs[0], (*head)[1], (*head)[2], {}};
    for (Vertex x : lhs) step.reassignment[x] = step.w2;
    return step;
  }
  if (absl::ConsumePrefix(&rest, "split ")) {
    std::vector<absl::string_view> parts = absl::StrSplit(rest, '|');
    if (parts.size() != 4)
      return absl::InvalidArgumentError("split needs 'z | Nu | Nv | w -> u v'");
    auto z = ParseVertexList(parts[0]);
    auto n_u = ParseVertexList(parts[1]);
    auto n_v = ParseVertexList(parts[2]);
    for (const auto* r : {&z, &n_u, &n_v})
      if (!r->ok()) return r->status();
    if (auto s = ParseArrow(parts[3], &lhs, &rhs); !s.ok()) return s;
    if (z->size() != 1 || lhs.size() != 1 || rhs.size() != 2)
      return absl::InvalidArgumentError(
          "split needs one z, one w and two new vertices");
    return GeneralizedVertexSplit{(*z)[0], *n_u, *n_v, rhs[0], rhs[1], lhs[0]};
  }
  if (absl::ConsumePrefix(&rest, "addedge ")) {
    auto vs = ParseVertexList(rest);
    if (!vs.ok()) return vs.status();
    if (vs->size() != 2) return absl::InvalidArgumentError("addedge needs 2 vertices");
    return AddEdge{(*vs)[0], (*vs)[1]};
  }
  if (absl::ConsumePrefix(&rest, "addvertex ")) {
    std::vector<absl::string_view> parts = absl::StrSplit(rest, ':');
    if (parts.size() != 2)
      return absl::InvalidArgumentError("addvertex needs 'z: n1 n2 ...'");
    auto z = ParseVertexList(parts[0]);
    auto nbrs = ParseVertexList(parts[1]);
    if (!z.ok()) return z.status();
    if (!nbrs.ok()) return nbrs.status();
    if (z->size() != 1)
      return absl::InvalidArgumentError("addvertex needs one new vertex");
    return AddVertexWithNeighbors{(*z)[0], *nbrs};
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown step '", original, "'"));
}

VertexToFourCycle CompleteFourCycle(const Graph& g, VertexToFourCycle step) {
  if (!g.HasVertex(step.w)) return step;
  for (Vertex x : g.Neighbors(step.w))
    if (x != step.v1 && x != step.v2 && !step.reassignment.count(x))
      step.reassignment[x] = step.w;
  return step;
}

}  // namespace normrig
