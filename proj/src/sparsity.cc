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

#include "normrig/sparsity.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>

#include "absl/strings/string_view.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "normrig/operations.h"

namespace normrig {

// ---------------------------------------------------------------------------
// Pebble game.

PebbleGame::PebbleGame(int num_vertices, int k, int l)
    : k_(k), l_(l), pebbles_(num_vertices, k), out_(num_vertices) {}

// Moves one free pebble onto `root` by reversing a directed path to a vertex
// holding one. `held` keeps its pebbles.
bool PebbleGame::Gather(int root, int held) {
  const int n = static_cast<int>(pebbles_.size());
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  seen[held] = 1;
  std::vector<int> stack = {root};
  int found = -1;
  while (!stack.empty() && found < 0) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : out_[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
  }
  if (found < 0) return false;
  for (int c = found; c != root;) {
    const int p = parent[c];
    auto& edges = out_[p];
    edges.erase(std::find(edges.begin(), edges.end(), c));
    out_[c].push_back(p);
    c = p;
  }
  --pebbles_[found];
  ++pebbles_[root];
  return true;
}

std::vector<int> PebbleGame::ReachFrom(int a, int b) const {
  std::vector<char> seen(pebbles_.size(), 0);
  std::vector<int> stack = {a, b}, out;
  seen[a] = seen[b] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : out_[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PebbleGame::TryAddEdge(int a, int b) {
  if (a == b) {
    rejection_set_ = {a};
    return false;
  }
  while (pebbles_[a] + pebbles_[b] < l_ + 1) {
    if (pebbles_[a] < k_ && Gather(a, b)) continue;
    if (pebbles_[b] < k_ && Gather(b, a)) continue;
    rejection_set_ = ReachFrom(a, b);
    return false;
  }
  if (pebbles_[a] > 0) {
    --pebbles_[a];
    out_[a].push_back(b);
  } else {
    --pebbles_[b];
    out_[b].push_back(a);
  }
  ++accepted_;
  return true;
}

absl::StatusOr<SparsityReport> CheckSparse(const Graph& g, int k, int l) {
  if (k < 1 || l < 0 || l >= 2 * k)
    return absl::InvalidArgumentError(
        absl::StrCat("pebble game needs k >= 1 and 0 <= l < 2k, got k=", k,
                     " l=", l));
  PebbleGame game(g.num_vertices(), k, l);
  SparsityReport report;
  for (const Edge& e : g.edges()) {
    if (game.TryAddEdge(g.IndexOf(e.a), g.IndexOf(e.b))) continue;
    if (report.rejected_edge) continue;
    report.rejected_edge = e;
    for (int i : game.last_rejection_set())
      report.violating_set.push_back(g.vertices()[i]);
    report.violating_count = g.InducedEdgeCount(report.violating_set);
    report.violating_bound =
        k * static_cast<int>(report.violating_set.size()) - l;
  }
  report.rank = game.num_accepted();
  report.sparse = report.rank == g.num_edges();
  report.tight = report.sparse && g.num_edges() == k * g.num_vertices() - l;
  return report;
}

absl::StatusOr<int> PebbleRank(const Graph& g, int k, int l) {
  auto report = CheckSparse(g, k, l);
  if (!report.ok()) return report.status();
  return report->rank;
}

bool IsRigidComb(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  return *PebbleRank(g, 2, 2) == 2 * g.num_vertices() - 2;
}

// ---------------------------------------------------------------------------
// Coincident-pair counts.

absl::StatusOr<int> ValSet(const std::vector<Vertex>& subset, Vertex u,
                           Vertex v) {
  std::set<Vertex> s(subset.begin(), subset.end());
  if (s.size() != subset.size())
    return absl::InvalidArgumentError("val: repeated vertex in set");
  if (s.size() < 2) return absl::InvalidArgumentError("val: needs |U| >= 2");
  const int size = static_cast<int>(s.size());
  int t = 2;
  if (size == 2 && s.count(u) && s.count(v)) {
    t = 4;
  } else if (size == 2 || size == 3) {
    t = 3;
  }
  return 2 * size - t;
}

absl::Status ValidateFamily(const CompatibleFamily& family) {
  if (family.u == family.v)
    return absl::InvalidArgumentError("family: u == v");
  if (family.sets.empty())
    return absl::InvalidArgumentError("family: no sets");
  std::set<std::set<Vertex>> distinct;
  for (const auto& x : family.sets) {
    std::set<Vertex> s(x.begin(), x.end());
    if (s.size() != x.size())
      return absl::InvalidArgumentError("family: repeated vertex in a set");
    if (!s.count(family.u) || !s.count(family.v))
      return absl::InvalidArgumentError("family: a set misses u or v");
    if (s.size() < 3)
      return absl::InvalidArgumentError("family: a set has fewer than 3 vertices");
    if (!distinct.insert(s).second)
      return absl::InvalidArgumentError("family: repeated set");
  }
  return absl::OkStatus();
}

absl::StatusOr<int> ValFamily(const CompatibleFamily& family) {
  if (absl::Status s = ValidateFamily(family); !s.ok()) return s;
  int total = 0;
  for (const auto& x : family.sets) total += *ValSet(x, family.u, family.v);
  return total - 2 * (static_cast<int>(family.sets.size()) - 1);
}

int FamilyCoveredEdges(const Graph& g, const CompatibleFamily& family) {
  std::vector<std::set<Vertex>> sets;
  for (const auto& x : family.sets) sets.emplace_back(x.begin(), x.end());
  int covered = 0;
  for (const Edge& e : g.edges()) {
    for (const auto& s : sets)
      if (s.count(e.a) && s.count(e.b)) {
        ++covered;
        break;
      }
  }
  return covered;
}

namespace {

// Dense local view of a small graph: vertex i <-> g.vertices()[i].
struct LocalGraph {
  int n = 0;
  std::vector<uint32_t> adj;
  std::vector<std::pair<int, int>> edges;

  explicit LocalGraph(const Graph& g) : n(g.num_vertices()), adj(n, 0) {
    for (const Edge& e : g.edges()) {
      const int a = g.IndexOf(e.a), b = g.IndexOf(e.b);
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
      edges.emplace_back(a, b);
    }
  }

  int InducedEdges(uint32_t mask) const {
    int twice = 0;
    for (uint32_t m = mask; m; m &= m - 1)
      twice += std::popcount(adj[std::countr_zero(m)] & mask);
    return twice / 2;
  }

  // Edge-index bitmask of G[mask]; requires |E| <= 64.
  uint64_t InducedEdgeMask(uint32_t mask) const {
    uint64_t out = 0;
    for (size_t i = 0; i < edges.size(); ++i)
      if ((mask >> edges[i].first & 1) && (mask >> edges[i].second & 1))
        out |= uint64_t{1} << i;
    return out;
  }

  bool Connected(uint32_t mask) const {
    if (!mask) return false;
    uint32_t seen = mask & -mask, frontier = seen;
    while (frontier) {
      uint32_t next = 0;
      for (uint32_t m = frontier; m; m &= m - 1)
        next |= adj[std::countr_zero(m)] & mask;
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == mask;
  }
};

std::vector<Vertex> MaskToVertices(const Graph& g, uint32_t mask) {
  std::vector<Vertex> out;
  for (uint32_t m = mask; m; m &= m - 1)
    out.push_back(g.vertices()[std::countr_zero(m)]);
  return out;
}

absl::StatusOr<VertexPair> RequirePair(const Graph& g, absl::string_view op) {
  if (!g.designated_pair())
    return absl::FailedPreconditionError(
        absl::StrCat(op, ": graph has no designated pair"));
  return *g.designated_pair();
}

UvSparsityResult UvEdgeViolation(const VertexPair& p) {
  return {false, SetWitness{{p.u, p.v}, 1, 0}};
}

}  // namespace

absl::StatusOr<UvSparsityResult> IsUvSparseBruteForce(const Graph& g) {
  auto pair = RequirePair(g, "is_uv_sparse_bruteforce");
  if (!pair.ok()) return pair.status();
  if (g.num_vertices() > 7)
    return absl::OutOfRangeError(
        "is_uv_sparse_bruteforce: enumeration guard is |V| <= 7");
  if (g.HasEdge(pair->u, pair->v)) return UvEdgeViolation(*pair);

  const LocalGraph local(g);
  const int n = local.n;
  const int iu = g.IndexOf(pair->u), iv = g.IndexOf(pair->v);
  const uint32_t uv_mask = (1u << iu) | (1u << iv);

  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Vertex> set = MaskToVertices(g, mask);
    const int covered = local.InducedEdges(mask);
    const int value = *ValSet(set, pair->u, pair->v);
    if (covered > value)
      return UvSparsityResult{false, SetWitness{set, covered, value}};
  }

  // Every superset of {u,v} with at least 3 vertices, then every nonempty
  // subfamily. Adding set X raises val by val(X) - 2 and covers at most
  // |E(G[X])| new edges, so a branch whose remaining positive slack cannot
  // lift covered - val above zero holds no violation.
  struct Candidate {
    uint32_t mask;
    uint64_t edges;
    int gain;  // val(X) - 2
    int slack;
  };
  std::vector<Candidate> cands;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & uv_mask) != uv_mask || std::popcount(mask) < 3) continue;
    Candidate c;
    c.mask = mask;
    c.edges = local.InducedEdgeMask(mask);
    c.gain = *ValSet(MaskToVertices(g, mask), pair->u, pair->v) - 2;
    c.slack = std::max(0, std::popcount(c.edges) - c.gain);
    cands.push_back(c);
  }
  std::vector<int> suffix(cands.size() + 1, 0);
  for (int i = static_cast<int>(cands.size()) - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] + cands[i].slack;

  std::vector<int> chosen;
  std::optional<UvSparsityResult> found;
  std::function<void(size_t, uint64_t, int)> dfs = [&](size_t i,
                                                       uint64_t covered,
                                                       int value) {
    if (found) return;
    const int count = std::popcount(covered);
    if (!chosen.empty() && count > value) {
      CompatibleFamily fam{pair->u, pair->v, {}};
      for (int c : chosen) fam.sets.push_back(MaskToVertices(g, cands[c].mask));
      found = UvSparsityResult{false, FamilyWitness{fam, count, value}};
      return;
    }
    if (i == cands.size() || count - value + suffix[i] <= 0) return;
    chosen.push_back(static_cast<int>(i));
    dfs(i + 1, covered | cands[i].edges, value + cands[i].gain);
    chosen.pop_back();
    dfs(i + 1, covered, value);
  };
  dfs(0, 0, 2);
  if (found) return *found;
  return UvSparsityResult{true, {}};
}

absl::StatusOr<UvSparsityResult> IsUvSparse(const Graph& g) {
  auto pair = RequirePair(g, "is_uv_sparse");
  if (!pair.ok()) return pair.status();
  if (g.num_vertices() > 22)
    return absl::OutOfRangeError("is_uv_sparse: supports |V| <= 22");
  if (g.HasEdge(pair->u, pair->v)) return UvEdgeViolation(*pair);

  // Sets avoiding {u,v} (and {u,v} itself) only need the (2,2) count.
  auto plain = CheckSparse(g, 2, 2);
  if (!plain->sparse) {
    const auto& set = plain->violating_set;
    return UvSparsityResult{
        false,
        SetWitness{set, plain->violating_count, *ValSet(set, pair->u, pair->v)}};
  }

  // Families {u,v} + C_i with disjoint C_i connected in G - u - v. The excess
  // covered - val is additive: -2 + sum w(C_i), where
  //   w(C) = |E(G[C + uv])| - 2|C| + [|C| == 1].
  // Find the best packing by subset DP over the other vertices.
  const LocalGraph local(g);
  const int iu = g.IndexOf(pair->u), iv = g.IndexOf(pair->v);
  std::vector<int> others;
  for (int i = 0; i < local.n; ++i)
    if (i != iu && i != iv) others.push_back(i);
  const int m = static_cast<int>(others.size());
  const uint32_t full = (1u << m) - 1;
  auto to_local = [&](uint32_t sub) {
    uint32_t out = 0;
    for (uint32_t s = sub; s; s &= s - 1)
      out |= 1u << others[std::countr_zero(s)];
    return out;
  };
  const uint32_t uv_mask = (1u << iu) | (1u << iv);

  constexpr int kNone = -1000000;
  std::vector<int> weight(full + 1, kNone);
  for (uint32_t sub = 1; sub <= full; ++sub) {
    const uint32_t lm = to_local(sub);
    if (!local.Connected(lm)) continue;
    const int size = std::popcount(sub);
    weight[sub] = local.InducedEdges(lm | uv_mask) - 2 * size + (size == 1);
  }
  std::vector<int> best(full + 1, 0);
  std::vector<uint32_t> pick(full + 1, 0);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    const uint32_t low = mask & -mask;
    best[mask] = best[mask ^ low];
    pick[mask] = 0;
    const uint32_t rest = mask ^ low;
    for (uint32_t s = rest;; s = (s - 1) & rest) {
      const uint32_t sub = s | low;
      if (weight[sub] != kNone && weight[sub] + best[mask ^ sub] > best[mask]) {
        best[mask] = weight[sub] + best[mask ^ sub];
        pick[mask] = sub;
      }
      if (s == 0) break;
    }
  }
  if (best[full] <= 2) return UvSparsityResult{true, {}};

  CompatibleFamily fam{pair->u, pair->v, {}};
  for (uint32_t mask = full; mask;) {
    const uint32_t sub = pick[mask];
    if (!sub) {
      mask ^= mask & -mask;
      continue;
    }
    fam.sets.push_back(MaskToVertices(g, to_local(sub) | uv_mask));
    mask ^= sub;
  }
  const int covered = FamilyCoveredEdges(g, fam);
  const int value = *ValFamily(fam);
  return UvSparsityResult{false, FamilyWitness{fam, covered, value}};
}

absl::StatusOr<bool> IsUvRigidComb(const Graph& g) {
  auto pair = RequirePair(g, "is_uv_rigid_comb");
  if (!pair.ok()) return pair.status();
  const Graph deleted = WithoutEdge(g, pair->u, pair->v);
  if (!IsRigidComb(deleted)) return false;
  auto contracted = ContractPair(g, pair->u, pair->v);
  if (!contracted.ok()) return contracted.status();
  return IsRigidComb(*contracted);
}

// ---------------------------------------------------------------------------
// Cover bound.

absl::StatusOr<CoverResult> CoverRankBound(const Graph& g) {
  if (g.num_vertices() > 8)
    return absl::OutOfRangeError("cover_rank_bound: enumeration guard is |V| <= 8");
  const LocalGraph local(g);
  const int n = local.n;
  const int num_edges = static_cast<int>(local.edges.size());
  if (num_edges == 0) return CoverResult{0, {}};
  auto cost = [](int size) { return size == 2 ? 1 : 2 * size - 2; };

  // Candidate sets: connected vertex sets of size >= 2. Splitting a set along
  // the components of its induced graph never raises the cost and keeps
  // pairwise intersections at most 1, so these suffice.
  std::vector<uint32_t> cands;
  for (uint32_t mask = 1; mask < (1u << n); ++mask)
    if (std::popcount(mask) >= 2 && local.Connected(mask)) cands.push_back(mask);
  std::sort(cands.begin(), cands.end(), [](uint32_t a, uint32_t b) {
    return std::popcount(a) != std::popcount(b)
               ? std::popcount(a) > std::popcount(b)
               : a < b;
  });
  std::vector<uint64_t> cand_edges;
  for (uint32_t c : cands) cand_edges.push_back(local.InducedEdgeMask(c));

  const uint64_t all = num_edges == 64 ? ~uint64_t{0}
                                       : (uint64_t{1} << num_edges) - 1;
  int best_cost = cost(n) + 1;
  std::vector<uint32_t> best_cover, current;
  std::function<void(uint64_t, int)> search = [&](uint64_t covered, int spent) {
    if (covered == all) {
      if (spent < best_cost) {
        best_cost = spent;
        best_cover = current;
      }
      return;
    }
    if (spent + 1 >= best_cost) return;
    const int e = std::countr_zero(~covered);
    const uint32_t ends =
        (1u << local.edges[e].first) | (1u << local.edges[e].second);
    for (size_t i = 0; i < cands.size(); ++i) {
      const uint32_t y = cands[i];
      if ((y & ends) != ends) continue;
      const int c = cost(std::popcount(y));
      if (spent + c >= best_cost) continue;
      // Two sets meet in at most one vertex, and only if one is a pair.
      bool ok = true;
      for (uint32_t prev : current) {
        const int shared = std::popcount(prev & y);
        if (shared > 1 ||
            (shared == 1 && std::min(std::popcount(prev), std::popcount(y)) > 2)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(y);
      search(covered | cand_edges[i], spent + c);
      current.pop_back();
    }
  };
  search(0, 0);

  CoverResult result;
  result.bound = best_cost;
  for (uint32_t y : best_cover) result.cover.push_back(MaskToVertices(g, y));
  return result;
}

namespace {

std::string FormatSet(std::vector<Vertex> set, std::optional<VertexPair> uv) {
  std::sort(set.begin(), set.end());
  if (uv) {
    std::vector<Vertex> ordered = {uv->u, uv->v};
    for (Vertex x : set)
      if (x != uv->u && x != uv->v) ordered.push_back(x);
    if (ordered.size() == set.size()) set = ordered;
  }
  return absl::StrCat("{", absl::StrJoin(set, ","), "}");
}

}  // namespace

std::string WitnessToString(const UvWitness& witness) {
  if (const auto* s = std::get_if<SetWitness>(&witness))
    return absl::StrCat("witness set ", FormatSet(s->set, std::nullopt),
                        ": covers ", s->covered, " > val ", s->value);
  if (const auto* f = std::get_if<FamilyWitness>(&witness)) {
    std::vector<std::string> parts;
    for (const auto& x : f->family.sets)
      parts.push_back(FormatSet(x, VertexPair{f->family.u, f->family.v}));
    return absl::StrCat("witness family ", absl::StrJoin(parts, ","),
                        ": covers ", f->covered, " > val ", f->value);
  }
  return "";
}

}  // namespace normrig
