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

#include "normrig/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "normrig/enumeration.h"
#include "normrig/graph_io.h"
#include "normrig/operations.h"
#include "normrig/sparsity.h"

namespace normrig {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void Record(SweepReport& report, bool agree, const Graph& g,
            std::string detail, uint64_t seed) {
  ++report.instances;
  if (agree) {
    ++report.agreements;
  } else {
    report.disagreements.push_back({FormatGraphText(g), std::move(detail), seed});
  }
}

nlohmann::json BaseConfig(const SweepConfig& config) {
  return {{"norm", config.norm->Name()},
          {"trials", config.trials},
          {"seed", config.seed},
          {"max_retries", config.max_retries}};
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

Graph AddRandomNonEdge(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> missing;
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.HasEdge(vs[i], vs[j])) missing.emplace_back(vs[i], vs[j]);
  if (missing.empty()) return g;
  const Edge e = missing[std::uniform_int_distribution<size_t>(
      0, missing.size() - 1)(rng)];
  return *AddEdgeMove(g, e.a, e.b);
}

template <typename T>
const T& Pick(const std::vector<T>& items, std::mt19937_64& rng) {
  return items[std::uniform_int_distribution<size_t>(0, items.size() - 1)(rng)];
}

int UniformInt(int lo, int hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

nlohmann::json SweepReport::ToJson(bool include_runtime) const {
  nlohmann::json j;
  j["name"] = name;
  j["instances"] = instances;
  j["agreements"] = agreements;
  j["disagreements"] = nlohmann::json::array();
  for (const Disagreement& d : disagreements)
    j["disagreements"].push_back(
        {{"graph", d.graph}, {"detail", d.detail}, {"seed", d.seed}});
  j["config"] = config;
  j["counters"] = counters;
  if (include_runtime) j["runtime_seconds"] = runtime_seconds;
  return j;
}

std::string SweepReport::ToText(bool include_runtime) const {
  std::string out = absl::StrFormat(
      "%s: %d instances, %d agreements, %d disagreements\n", name, instances,
      agreements, disagreements.size());
  absl::StrAppend(&out, "config: ", config.dump(), "\n");
  for (const auto& [key, value] : counters)
    absl::StrAppend(&out, "  ", key, ": ", value, "\n");
  for (const Disagreement& d : disagreements)
    absl::StrAppend(&out, "disagreement (seed ", d.seed, "): ", d.detail, "\n",
                    d.graph);
  if (include_runtime)
    absl::StrAppend(&out, absl::StrFormat("runtime: %.3f s\n", runtime_seconds));
  return out;
}

RankReport StableGenericRank(const Graph& g, const SweepConfig& config,
                             uint64_t seed, int* retries) {
  RankOptions opts;
  opts.trials = config.trials;
  opts.seed = seed;
  RankReport report = GenericRank(g, config.norm, opts);
  int used = 0;
  while (report.unstable && used < config.max_retries) {
    opts.seed = TrialSeed(seed, 1000 + used);
    report = MergeReports(report, GenericRank(g, config.norm, opts));
    ++used;
  }
  if (retries) *retries = used;
  return report;
}

absl::StatusOr<RankReport> StableUvGenericRank(const Graph& g,
                                               const SweepConfig& config,
                                               uint64_t seed, int* retries) {
  RankOptions opts;
  opts.trials = config.trials;
  opts.seed = seed;
  auto report = UvGenericRank(g, config.norm, opts);
  if (!report.ok()) return report.status();
  int used = 0;
  while (report->unstable && used < config.max_retries) {
    opts.seed = TrialSeed(seed, 1000 + used);
    auto again = UvGenericRank(g, config.norm, opts);
    if (!again.ok()) return again.status();
    *report = MergeReports(*report, *again);
    ++used;
  }
  if (retries) *retries = used;
  return report;
}

SweepReport RigiditySweep(int min_n, int max_n, const SweepConfig& config) {
  Stopwatch clock;
  SweepReport report;
  report.name = "rigidity";
  report.config = BaseConfig(config);
  report.config["min_n"] = min_n;
  report.config["max_n"] = max_n;
  int index = 0;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, /*connected_only=*/true)) {
      const uint64_t seed = TrialSeed(config.seed, index++);
      int retries = 0;
      const RankReport r = StableGenericRank(g, config, seed, &retries);
      const bool comb = IsRigidComb(g);
      report.counters["rigid"] += comb;
      report.counters["retries"] += retries;
      Record(report, comb == r.infinitesimally_rigid, g,
             absl::StrFormat("combinatorial rigid %s, numerical rank %d of %d",
                             YesNo(comb), r.rank, 2 * n - 2),
             seed);
    }
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

namespace {

void CheckEquivalence(SweepReport& report, const Graph& g,
                      const SweepConfig& config, uint64_t seed) {
  int retries = 0;
  const auto r = StableUvGenericRank(g, config, seed, &retries);
  const auto comb = IsUvSparse(g);
  if (!r.ok() || !comb.ok()) {
    Record(report, false, g,
           absl::StrCat("error: ", r.ok() ? comb.status().ToString()
                                          : r.status().ToString()),
           seed);
    return;
  }
  report.counters["uv_sparse"] += comb->sparse;
  report.counters["retries"] += retries;
  Record(report, comb->sparse == r->independent, g,
         absl::StrFormat("uv-sparse %s, uv-rank %d of %d rows, uv edge %s",
                         YesNo(comb->sparse), r->rank, r->rows,
                         YesNo(g.HasEdge(g.designated_pair()->u,
                                         g.designated_pair()->v))),
         seed);
}

Graph RandomEquivalenceInstance(int n, int kind, std::mt19937_64& rng) {
  const VertexPair pair{0, 1};
  switch (kind % 3) {
    case 0:
      return RandomGraphWithEdges(n, UniformInt(n - 1, 2 * n - 1, rng), rng,
                                  pair);
    case 1:
      return RandomUvSparseGraph(n, 2 * n - 2, rng);
    default:
      return AddRandomNonEdge(RandomUvSparseGraph(n, 2 * n - 3, rng), rng);
  }
}

}  // namespace

SweepReport EquivalenceSweep(const EquivalenceParams& params,
                             const SweepConfig& config) {
  Stopwatch clock;
  SweepReport report;
  report.name = "equivalence";
  report.config = BaseConfig(config);
  report.config["max_n"] = params.max_n;
  report.config["random_samples"] = params.random_samples;
  report.config["random_n"] = {params.random_min_n, params.random_max_n};
  int index = 0;
  for (int n = 2; n <= params.max_n; ++n)
    for (const Graph& g : NonIsomorphicPairedGraphs(n))
      CheckEquivalence(report, g, config, TrialSeed(config.seed, index++));
  for (int i = 0; i < params.random_samples; ++i) {
    const uint64_t seed = TrialSeed(config.seed, index++);
    std::mt19937_64 rng(seed);
    const int n = UniformInt(params.random_min_n, params.random_max_n, rng);
    CheckEquivalence(report, RandomEquivalenceInstance(n, i, rng), config, seed);
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

namespace {

void CheckDeleteContract(SweepReport& report, const Graph& g,
                         const SweepConfig& config, uint64_t seed) {
  int retries = 0;
  const auto r = StableUvGenericRank(g, config, seed, &retries);
  const auto comb = IsUvRigidComb(g);
  if (!r.ok() || !comb.ok()) {
    Record(report, false, g,
           absl::StrCat("error: ", r.ok() ? comb.status().ToString()
                                          : r.status().ToString()),
           seed);
    return;
  }
  report.counters["uv_rigid"] += *comb;
  report.counters["retries"] += retries;
  Record(report, *comb == r->infinitesimally_rigid, g,
         absl::StrFormat("G-uv and G/uv rigid %s, uv-rank %d of %d",
                         YesNo(*comb), r->rank, 2 * g.num_vertices() - 2),
         seed);
}

Graph RandomDeleteContractInstance(int n, int kind, std::mt19937_64& rng) {
  const VertexPair pair{0, 1};
  switch (kind % 4) {
    case 0:
      return RandomGraphWithEdges(n, UniformInt(2 * n - 4, 2 * n + 2, rng),
                                  rng, pair);
    case 1:
      return RandomUvSparseGraph(n, 2 * n - 2, rng);
    case 2:
      return *AddEdgeMove(RandomUvSparseGraph(n, 2 * n - 2, rng), 0, 1);
    default:
      return AddRandomNonEdge(RandomUvSparseGraph(n, 2 * n - 2, rng), rng);
  }
}

}  // namespace

SweepReport DeleteContractSweep(const DeleteContractParams& params,
                                const SweepConfig& config) {
  Stopwatch clock;
  SweepReport report;
  report.name = "delete-contract";
  report.config = BaseConfig(config);
  report.config["samples"] = params.samples;
  report.config["n"] = {params.min_n, params.max_n};
  report.config["exhaustive_max_n"] = params.exhaustive_max_n;
  report.config["pinned"] = params.pinned;
  int index = 0;
  if (params.pinned) {
    for (const Graph& g : {TwoK4Graph(), K23Graph()})
      CheckDeleteContract(report, g, config, TrialSeed(config.seed, index++));
  }
  for (int n = 2; n <= params.exhaustive_max_n; ++n)
    for (const Graph& g : NonIsomorphicPairedGraphs(n))
      CheckDeleteContract(report, g, config, TrialSeed(config.seed, index++));
  for (int i = 0; i < params.samples; ++i) {
    const uint64_t seed = TrialSeed(config.seed, index++);
    std::mt19937_64 rng(seed);
    const int n = UniformInt(std::max(params.min_n, 2), params.max_n, rng);
    CheckDeleteContract(report, RandomDeleteContractInstance(n, i, rng), config,
                        seed);
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

namespace {

// Builds one random application; `Status` when the sampled parameters do
// not admit the move.
using MoveSampler =
    std::function<absl::StatusOr<Graph>(std::mt19937_64& rng, Graph* seed)>;

struct NamedMove {
  std::string name;
  MoveSampler sample;
};

Graph RandomIndependentSeed(std::mt19937_64& rng) {
  const int n = UniformInt(3, 7, rng);
  return RandomSparseGraph(n, UniformInt(n - 1, 2 * n - 2, rng), rng);
}

Graph RandomUvIndependentSeed(std::mt19937_64& rng) {
  const int n = UniformInt(4, 7, rng);
  return RandomUvSparseGraph(n, UniformInt(n - 1, 2 * n - 2, rng), rng);
}

std::vector<Vertex> VerticesOfDegreeAtLeast(const Graph& g, int d) {
  std::vector<Vertex> out;
  for (Vertex x : g.vertices())
    if (g.Degree(x) >= d) out.push_back(x);
  return out;
}

absl::StatusOr<Graph> RandomFourCycle(const Graph& g, Vertex w,
                                      std::mt19937_64& rng) {
  std::vector<Vertex> nbrs = g.Neighbors(w);
  if (nbrs.size() < 2) return absl::FailedPreconditionError("degree < 2");
  std::shuffle(nbrs.begin(), nbrs.end(), rng);
  if (const auto& p = g.designated_pair();
      p && Edge(nbrs[0], nbrs[1]) == Edge(p->u, p->v))
    return absl::FailedPreconditionError("4-cycle through both u and v");
  const Vertex w2 = g.FreshVertex();
  std::map<Vertex, Vertex> reassignment;
  for (size_t i = 2; i < nbrs.size(); ++i)
    reassignment[nbrs[i]] = UniformInt(0, 1, rng) ? w : w2;
  return VertexToFourCycleMove(g, w, w2, nbrs[0], nbrs[1], reassignment);
}

// Attaches a copy of h at w, with h_w playing w. Returns the result and the
// embedding map.
absl::StatusOr<Graph> RandomVertexToH(const Graph& g, Vertex w, const Graph& h,
                                      Vertex h_w, std::mt19937_64& rng,
                                      std::map<Vertex, Vertex>* mapping) {
  const Graph embedded = EmbedAttachedGraph(g, w, h, h_w, mapping);
  std::map<Vertex, Vertex> reassignment;
  for (Vertex x : g.Neighbors(w))
    reassignment[x] = Pick(embedded.vertices(), rng);
  return VertexToHMove(g, w, embedded, reassignment);
}

std::vector<Graph> UvTightLibrary() {
  std::vector<Graph> out = {TwoK4Graph()};
  for (int n : {5, 6})
    for (const Graph& g : NonIsomorphicPairedGraphs(n))
      if (!g.HasEdge(0, 1) && g.num_edges() == 2 * n - 2 && IsUvSparse(g)->sparse)
        out.push_back(g);
  return out;
}

std::vector<Graph> TightLibrary() {
  std::vector<Graph> out;
  for (int n : {4, 5})
    for (const Graph& g : NonIsomorphicGraphs(n, false))
      if (CheckSparse(g, 2, 2)->tight) out.push_back(g);
  return out;
}

std::vector<NamedMove> PreservationMoves() {
  auto uv_tight = std::make_shared<std::vector<Graph>>(UvTightLibrary());
  auto tight = std::make_shared<std::vector<Graph>>(TightLibrary());
  std::vector<NamedMove> moves;

  moves.push_back({"uv-0-extension", [](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomUvIndependentSeed(rng);
    const Vertex a = Pick(seed->vertices(), rng), b = Pick(seed->vertices(), rng);
    if (a == b || Edge(a, b) == Edge(0, 1))
      return absl::FailedPreconditionError("bad pair");
    return ZeroExtension(*seed, a, b, seed->FreshVertex());
  }});

  moves.push_back({"uv-1-extension", [](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomUvIndependentSeed(rng);
    if (seed->num_edges() == 0) return absl::FailedPreconditionError("no edges");
    const Edge e = Pick(seed->edges(), rng);
    const Vertex c = Pick(seed->vertices(), rng);
    if (c == e.a || c == e.b) return absl::FailedPreconditionError("c on edge");
    const std::vector<Vertex> abc = {e.a, e.b, c};
    if (std::count(abc.begin(), abc.end(), 0) && std::count(abc.begin(), abc.end(), 1))
      return absl::FailedPreconditionError("pair inside {a,b,c}");
    return OneExtension(*seed, e.a, e.b, c, seed->FreshVertex());
  }});

  moves.push_back({"0-extension-adds-v", [](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomIndependentSeed(rng);
    const Vertex u = Pick(seed->vertices(), rng);
    const Vertex a = Pick(seed->vertices(), rng), b = Pick(seed->vertices(), rng);
    if (a == b || a == u || b == u) return absl::FailedPreconditionError("bad a, b");
    const Vertex v = seed->FreshVertex();
    auto g = ZeroExtension(*seed, a, b, v);
    if (!g.ok()) return g.status();
    return g->WithDesignatedPair(u, v);
  }});

  moves.push_back({"vertex-to-4-cycle-adds-u", [](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomIndependentSeed(rng);
    const auto ws = VerticesOfDegreeAtLeast(*seed, 2);
    if (ws.empty()) return absl::FailedPreconditionError("no vertex of degree 2");
    const Vertex w = Pick(ws, rng);
    auto g = RandomFourCycle(*seed, w, rng);
    if (!g.ok()) return g.status();
    return g->WithDesignatedPair(seed->FreshVertex(), w);
  }});

  moves.push_back({"uv-vertex-to-4-cycle", [](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomUvIndependentSeed(rng);
    const auto ws = VerticesOfDegreeAtLeast(*seed, 2);
    if (ws.empty()) return absl::FailedPreconditionError("no vertex of degree 2");
    return RandomFourCycle(*seed, Pick(ws, rng), rng);
  }});

  moves.push_back({"vertex-to-H-adds-u", [uv_tight](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomIndependentSeed(rng);
    const Vertex w = Pick(seed->vertices(), rng);
    const Graph& h = Pick(*uv_tight, rng);
    std::map<Vertex, Vertex> mapping;
    auto g = RandomVertexToH(*seed, w, h, h.designated_pair()->v, rng, &mapping);
    if (!g.ok()) return g.status();
    return g->WithDesignatedPair(mapping.at(h.designated_pair()->u), w);
  }});

  moves.push_back({"uv-vertex-to-H", [tight](std::mt19937_64& rng, Graph* seed)
                       -> absl::StatusOr<Graph> {
    *seed = RandomUvIndependentSeed(rng);
    const Vertex w = Pick(seed->vertices(), rng);
    const Graph& h = Pick(*tight, rng);
    std::map<Vertex, Vertex> mapping;
    return RandomVertexToH(*seed, w, h, Pick(h.vertices(), rng), rng, &mapping);
  }});
  return moves;
}

}  // namespace

SweepReport OperationPreservationSuite(int samples_per_operation,
                                       const SweepConfig& config) {
  Stopwatch clock;
  SweepReport report;
  report.name = "operations";
  report.config = BaseConfig(config);
  report.config["samples_per_operation"] = samples_per_operation;
  constexpr int kAttempts = 200;
  const std::vector<NamedMove> moves = PreservationMoves();
  for (size_t m = 0; m < moves.size(); ++m) {
    for (int i = 0; i < samples_per_operation; ++i) {
      const uint64_t seed =
          TrialSeed(config.seed, static_cast<int>(m) * 1000000 + i);
      std::mt19937_64 rng(seed);
      Graph before;
      absl::StatusOr<Graph> after = absl::UnknownError("not sampled");
      for (int attempt = 0; attempt < kAttempts && !after.ok(); ++attempt)
        after = moves[m].sample(rng, &before);
      if (!after.ok()) {
        Record(report, false, before,
               absl::StrCat(moves[m].name, ": no admissible application: ",
                            after.status().ToString()),
               seed);
        continue;
      }
      int retries = 0;
      const auto r = StableUvGenericRank(*after, config, seed, &retries);
      const auto comb = IsUvSparse(*after);
      const bool ok = r.ok() && comb.ok() && r->independent && comb->sparse;
      report.counters[moves[m].name] += 1;
      report.counters["retries"] += retries;
      Record(report, ok, *after,
             r.ok() && comb.ok()
                 ? absl::StrFormat("%s: uv-rank %d of %d rows, uv-sparse %s",
                                   moves[m].name, r->rank, r->rows,
                                   YesNo(comb->sparse))
                 : absl::StrCat(moves[m].name, ": error"),
             seed);
    }
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

SweepReport ConjectureProbe(const std::vector<NormHandle>& norms, int max_n,
                            const SweepConfig& config) {
  Stopwatch clock;
  SweepReport report;
  report.name = "conjecture-probe";
  report.config = BaseConfig(config);
  report.config.erase("norm");
  report.config["max_n"] = max_n;
  report.config["norms"] = nlohmann::json::array();
  for (const NormHandle& norm : norms) report.config["norms"].push_back(norm->Name());
  if (norms.empty()) return report;
  report.counters["p_dependent"] = 0;
  int index = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : NonIsomorphicPairedGraphs(n)) {
      const uint64_t seed = TrialSeed(config.seed, index++);
      const bool comb = IsUvSparse(g)->sparse;
      std::vector<bool> verdicts;
      for (const NormHandle& norm : norms) {
        SweepConfig local = config;
        local.norm = norm;
        const auto r = StableUvGenericRank(g, local, seed);
        const bool numeric = r.ok() && r->independent;
        verdicts.push_back(numeric);
        Record(report, numeric == comb, g,
               absl::StrFormat("%s: uv-sparse %s, uv-rank %d of %d rows",
                               norm->Name(), YesNo(comb), r.ok() ? r->rank : -1,
                               r.ok() ? r->rows : -1),
               seed);
      }
      if (std::adjacent_find(verdicts.begin(), verdicts.end(),
                             std::not_equal_to<>()) != verdicts.end())
        ++report.counters["p_dependent"];
    }
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

SweepReport CoverBoundSweep(int max_n, const SweepConfig& config) {
  Stopwatch clock;
  SweepReport report;
  report.name = "cover-bound";
  report.config = BaseConfig(config);
  report.config["max_n"] = max_n;
  report.counters["pebble_rank_mismatch"] = 0;
  int index = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, false)) {
      const uint64_t seed = TrialSeed(config.seed, index++);
      int retries = 0;
      const RankReport r = StableGenericRank(g, config, seed, &retries);
      const auto cover = CoverRankBound(g);
      report.counters["retries"] += retries;
      if (!cover.ok()) {
        Record(report, false, g, cover.status().ToString(), seed);
        continue;
      }
      if (*PebbleRank(g, 2, 2) != cover->bound)
        ++report.counters["pebble_rank_mismatch"];
      Record(report, cover->bound == r.rank, g,
             absl::StrFormat("cover bound %d, numerical rank %d", cover->bound,
                             r.rank),
             seed);
    }
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

namespace {

bool WitnessValid(const Graph& g, const UvSparsityResult& result) {
  const VertexPair pair = *g.designated_pair();
  if (result.sparse) return std::holds_alternative<std::monostate>(result.witness);
  if (const auto* s = std::get_if<SetWitness>(&result.witness)) {
    const auto val = ValSet(s->set, pair.u, pair.v);
    return val.ok() && *val == s->value &&
           g.InducedEdgeCount(s->set) == s->covered && s->covered > s->value;
  }
  if (const auto* f = std::get_if<FamilyWitness>(&result.witness)) {
    if (f->family.u != pair.u || f->family.v != pair.v) return false;
    if (!ValidateFamily(f->family).ok()) return false;
    const auto val = ValFamily(f->family);
    return val.ok() && *val == f->value &&
           FamilyCoveredEdges(g, f->family) == f->covered &&
           f->covered > f->value;
  }
  return false;
}

}  // namespace

SweepReport UvSparsityOracleSweep(int max_n) {
  Stopwatch clock;
  SweepReport report;
  report.name = "uv-sparsity-oracles";
  report.config = {{"max_n", max_n}, {"stream", "labelled, pair (0,1)"}};
  for (int n = 2; n <= max_n; ++n) {
    const uint32_t limit = uint32_t{1} << NumPairs(n);
    for (uint32_t mask = 0; mask < limit; ++mask) {
      const Graph g = GraphFromMask(n, mask, VertexPair{0, 1});
      const auto brute = IsUvSparseBruteForce(g);
      const auto reduced = IsUvSparse(g);
      if (!brute.ok() || !reduced.ok()) {
        Record(report, false, g, "oracle error", mask);
        continue;
      }
      const bool agree = brute->sparse == reduced->sparse &&
                         WitnessValid(g, *brute) && WitnessValid(g, *reduced);
      report.counters["uv_sparse"] += reduced->sparse;
      Record(report, agree, g,
             absl::StrFormat("brute force %s (%s), reduced %s (%s)",
                             YesNo(brute->sparse), WitnessToString(brute->witness),
                             YesNo(reduced->sparse),
                             WitnessToString(reduced->witness)),
             mask);
    }
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

SweepReport SupportFunctionalAudit(const std::vector<double>& exponents,
                                   int samples, int unit_samples,
                                   uint64_t seed) {
  Stopwatch clock;
  SweepReport report;
  report.name = "support-functional";
  report.config = {{"exponents", exponents},
                   {"samples", samples},
                   {"unit_samples", unit_samples},
                   {"seed", seed}};
  for (const char* key : {"identity", "dual_upper", "dual_lower", "homogeneity",
                          "independence"})
    report.counters[absl::StrCat("violations_", key)] = 0;
  for (size_t pi = 0; pi < exponents.size(); ++pi) {
    const auto plane = LpPlane::Create(exponents[pi]);
    if (!plane.ok()) {
      Record(report, false, Graph(), plane.status().ToString(), seed);
      continue;
    }
    std::mt19937_64 rng(TrialSeed(seed, static_cast<int>(pi)));
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> log_radius(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);

    std::vector<PlanePoint> unit(unit_samples);
    for (PlanePoint& x : unit) {
      const double t = angle(rng);
      const PlanePoint d{std::cos(t), std::sin(t)};
      x = (1.0 / (*plane)->Norm(d)) * d;
    }
    auto random_point = [&](int i) {
      const double r = std::pow(10.0, log_radius(rng));
      if (i % 50 == 0) return PlanePoint{i % 100 == 0 ? r : 0.0, i % 100 == 0 ? 0.0 : -r};
      const double t = angle(rng);
      return PlanePoint{r * std::cos(t), r * std::sin(t)};
    };

    PlanePoint prev = random_point(1);
    for (int i = 0; i < samples; ++i) {
      const PlanePoint z = random_point(i);
      const double nz = (*plane)->Norm(z);
      const Covector f = *(*plane)->SupportFunctional(z);
      std::string failed;

      if (std::abs(f(z) - nz * nz) > 1e-10 * nz * nz) {
        ++report.counters["violations_identity"];
        failed += " identity";
      }
      double best = -INFINITY;
      for (const PlanePoint& x : unit) best = std::max(best, f(x));
      if (best > nz * (1 + 1e-8)) {
        ++report.counters["violations_dual_upper"];
        failed += " dual-upper";
      }
      if (best < nz * (1 - 1e-3)) {
        ++report.counters["violations_dual_lower"];
        failed += " dual-lower";
      }
      const double lambda = scale(rng);
      const Covector g = *(*plane)->SupportFunctional(lambda * z);
      if (std::abs(g.x - lambda * f.x) > 1e-10 * std::max(1.0, std::abs(g.x)) ||
          std::abs(g.y - lambda * f.y) > 1e-10 * std::max(1.0, std::abs(g.y))) {
        ++report.counters["violations_homogeneity"];
        failed += " homogeneity";
      }
      // Linearly independent points have linearly independent functionals, with
      // the same orientation.
      const double np = (*plane)->Norm(prev);
      const double det_points = (z.x * prev.y - z.y * prev.x) / (nz * np);
      if (std::abs(det_points) > 1e-6) {
        const Covector h = *(*plane)->SupportFunctional(prev);
        const double det_f = (f.x * h.y - f.y * h.x) / (nz * np);
        if (det_f == 0.0 || (det_f > 0) != (det_points > 0)) {
          ++report.counters["violations_independence"];
          failed += " independence";
        }
      }
      prev = z;
      ++report.instances;
      if (failed.empty()) {
        ++report.agreements;
      } else {
        report.disagreements.push_back(
            {absl::StrFormat("z = (%.17g, %.17g)", z.x, z.y),
             absl::StrCat((*plane)->Name(), ":", failed), seed});
      }
    }
  }
  report.runtime_seconds = clock.Seconds();
  return report;
}

}  // namespace normrig
