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

#include "normrig/global_rigidity.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "absl/strings/string_view.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "normrig/rigidity.h"
#include "normrig/sparsity.h"

namespace normrig {

absl::string_view BaseTagName(BaseTag tag) {
  return tag == BaseTag::kK5MinusE ? "K5_MINUS_E" : "H_GRAPH";
}

absl::StatusOr<BaseTag> ParseBaseTag(absl::string_view name) {
  if (name == "K5_MINUS_E") return BaseTag::kK5MinusE;
  if (name == "H_GRAPH") return BaseTag::kHGraph;
  return absl::InvalidArgumentError(absl::StrCat("unknown base tag '", name, "'"));
}

Graph BaseGraph(BaseTag tag) {
  if (tag == BaseTag::kK5MinusE) {
    std::vector<Edge> edges;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        if (!(a == 3 && b == 4)) edges.emplace_back(a, b);
    return Graph::OnVertices(5, edges);
  }
  return Graph::OnVertices(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

bool IsRedundantlyRigidComb(const Graph& g) {
  for (const Edge& e : g.edges())
    if (!IsRigidComb(WithoutEdge(g, e.a, e.b))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Sequence files.

namespace {

absl::Status LineError(absl::string_view what, int line_no) {
  return absl::InvalidArgumentError(absl::StrCat(what, " at line ", line_no));
}

}  // namespace

absl::StatusOr<ConstructionSequence> ParseSequence(absl::string_view text) {
  ConstructionSequence seq;
  bool have_base = false;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = raw.substr(0, raw.find('#'));
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    if (!have_base) {
      absl::string_view tag = line;
      if (!absl::ConsumePrefix(&tag, "base "))
        return LineError("sequence must start with 'base <TAG>'", line_no);
      auto parsed = ParseBaseTag(absl::StripAsciiWhitespace(tag));
      if (!parsed.ok()) return LineError(parsed.status().message(), line_no);
      seq.base = *parsed;
      have_base = true;
      continue;
    }
    auto step = ParseStep(line);
    if (!step.ok()) return LineError(step.status().message(), line_no);
    if (!std::holds_alternative<AddEdge>(*step) &&
        !std::holds_alternative<AddVertexWithNeighbors>(*step) &&
        !std::holds_alternative<GeneralizedVertexSplit>(*step))
      return LineError("only addedge, addvertex and split steps are allowed",
                       line_no);
    seq.steps.push_back(*std::move(step));
  }
  if (!have_base) return absl::InvalidArgumentError("sequence has no base line");
  return seq;
}

std::string FormatSequence(const ConstructionSequence& seq) {
  std::string out = absl::StrCat("base ", BaseTagName(seq.base), "\n");
  for (const auto& step : seq.steps) absl::StrAppend(&out, StepToString(step), "\n");
  return out;
}

// ---------------------------------------------------------------------------
// Certification.

CertificateReport CertifySequence(const ConstructionSequence& seq,
                                  const CertifyOptions& options) {
  CertificateReport report;
  Graph g = BaseGraph(seq.base);
  bool all_rigid = true, all_redundant = true, all_numeric = true;
  for (const ConstructionStep& step : seq.steps) {
    StepVerdict verdict;
    verdict.step = StepToString(step);
    absl::StatusOr<Graph> next = absl::InternalError("unreachable");
    if (const auto* add = std::get_if<AddVertexWithNeighbors>(&step)) {
      verdict.degree = static_cast<int>(add->neighbors.size());
      if (verdict.degree < 3) {
        next = absl::InvalidArgumentError(
            "vertex addition needs at least 3 neighbours");
      } else {
        next = ApplyStep(g, step);
      }
    } else if (std::holds_alternative<AddEdge>(step) ||
               std::holds_alternative<GeneralizedVertexSplit>(step)) {
      next = ApplyStep(g, step);
    } else {
      next = absl::InvalidArgumentError(
          "only addedge, addvertex and split steps may appear");
    }
    if (!next.ok()) {
      verdict.error = std::string(next.status().message());
      report.steps.push_back(verdict);
      report.final_graph = g;
      return report;
    }
    g = *std::move(next);
    verdict.applied = true;
    if (const auto* split = std::get_if<GeneralizedVertexSplit>(&step)) {
      verdict.is_split = true;
      verdict.split_minus_uv_rigid =
          IsRigidComb(WithoutEdge(g, split->u, split->v));
      verdict.redundantly_rigid = IsRedundantlyRigidComb(g);
      all_rigid = all_rigid && verdict.split_minus_uv_rigid;
      all_redundant = all_redundant && verdict.redundantly_rigid;
      if (options.numeric_norm) {
        RankOptions ro;
        ro.trials = options.trials;
        ro.seed = options.seed;
        auto rank = UvGenericRank(g, options.numeric_norm, ro);
        all_numeric = all_numeric && rank.ok() && rank->infinitesimally_rigid;
      }
    }
    verdict.num_vertices = g.num_vertices();
    verdict.num_edges = g.num_edges();
    report.steps.push_back(verdict);
  }
  report.final_graph = g;
  report.completed = true;
  report.pass_split_rigid = all_rigid;
  report.pass_split_redundant = all_redundant;
  if (options.numeric_norm) report.numeric_recheck = all_numeric;
  return report;
}

// ---------------------------------------------------------------------------
// Generator.

absl::StatusOr<GeneratedGraph> RandomCertifiedGraph(const GeneratorParams& params) {
  std::mt19937_64 rng(params.seed);
  BaseTag base;
  if (params.target_size < 5)
    return absl::InvalidArgumentError("target size must be at least 5");
  if (params.target_size == 5) {
    base = BaseTag::kK5MinusE;
  } else {
    base = std::bernoulli_distribution(0.5)(rng) ? BaseTag::kHGraph
                                                 : BaseTag::kK5MinusE;
  }
  ConstructionSequence seq{base, {}};
  Graph g = BaseGraph(base);
  auto pick = [&](const std::vector<Vertex>& from) {
    return from[std::uniform_int_distribution<size_t>(0, from.size() - 1)(rng)];
  };
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  int attempts = 0;
  while (g.num_vertices() < params.target_size) {
    if (++attempts > params.retry_budget)
      return absl::ResourceExhaustedError(absl::StrCat(
          "generator retry budget exhausted at |V|=", g.num_vertices(),
          "; partial sequence:\n", FormatSequence(seq)));
    const double r = coin(rng);
    ConstructionStep step;
    if (r < params.add_vertex_probability) {
      std::vector<Vertex> pool = g.vertices();
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(3);
      std::sort(pool.begin(), pool.end());
      step = AddVertexWithNeighbors{g.FreshVertex(), pool};
    } else if (r < params.add_vertex_probability + params.add_edge_probability) {
      std::vector<Edge> missing;
      for (Vertex a : g.vertices())
        for (Vertex b : g.vertices())
          if (a < b && !g.HasEdge(a, b)) missing.emplace_back(a, b);
      if (missing.empty()) continue;
      const Edge e = missing[std::uniform_int_distribution<size_t>(
          0, missing.size() - 1)(rng)];
      step = AddEdge{e.a, e.b};
    } else {
      const Vertex z = pick(g.vertices());
      GeneralizedVertexSplit split;
      split.z = z;
      for (Vertex x : g.Neighbors(z))
        (std::bernoulli_distribution(0.5)(rng) ? split.n_u : split.n_v).push_back(x);
      std::vector<Vertex> w_pool;
      for (Vertex x : g.vertices())
        if (x != z &&
            std::find(split.n_u.begin(), split.n_u.end(), x) == split.n_u.end())
          w_pool.push_back(x);
      if (w_pool.empty()) continue;
      split.w = pick(w_pool);
      split.v = z;
      split.u = g.FreshVertex();
      auto next = ApplyStep(g, split);
      if (!next.ok() || !IsRigidComb(WithoutEdge(*next, split.u, split.v)))
        continue;
      step = split;
    }
    auto next = ApplyStep(g, step);
    if (!next.ok()) continue;
    g = *std::move(next);
    seq.steps.push_back(step);
  }

  GeneratedGraph out{g, seq, CertifySequence(seq)};
  if (!out.report.completed || !out.report.pass_split_rigid)
    return absl::InternalError("generator produced a sequence that fails certification");
  return out;
}

}  // namespace normrig
