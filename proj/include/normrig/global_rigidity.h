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

// Certification of construction sequences for globally rigid graphs in
// analytic normed planes. Starting from K5 - e or H (two K4s glued along an
// edge), a sequence may add edges, add vertices of degree >= 3, and apply
// generalised vertex splits. Each split is checked under two hypotheses:
//
//   split-rigid:      G' - uv is rigid.
//   split-redundant:  G' is redundantly rigid (implies split-rigid).
//
// This certifies the hypotheses only; it does not decide global rigidity.

#ifndef NORMRIG_GLOBAL_RIGIDITY_H_
#define NORMRIG_GLOBAL_RIGIDITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "normrig/graph.h"
#include "normrig/normed_plane.h"
#include "normrig/operations.h"

namespace normrig {

enum class BaseTag { kK5MinusE, kHGraph };

absl::string_view BaseTagName(BaseTag tag);  // "K5_MINUS_E" / "H_GRAPH"
absl::StatusOr<BaseTag> ParseBaseTag(absl::string_view name);

// K5 - e on 0..4 (missing edge 3-4); H on 0..5 as K4{0,1,2,3} and
// K4{2,3,4,5} sharing the edge 2-3.
Graph BaseGraph(BaseTag tag);

// G - e rigid for every edge e.
bool IsRedundantlyRigidComb(const Graph& g);

struct ConstructionSequence {
  BaseTag base = BaseTag::kHGraph;
  std::vector<ConstructionStep> steps;
};

// Line format, '#' starts a comment:
//   base H_GRAPH
//   addedge a b
//   addvertex z: n1 n2 n3 ...
//   split z | Nu... | Nv... | w -> u v
absl::StatusOr<ConstructionSequence> ParseSequence(absl::string_view text);
std::string FormatSequence(const ConstructionSequence& seq);

struct StepVerdict {
  std::string step;
  bool applied = false;
  std::string error;  // set when the step could not be applied
  bool is_split = false;
  bool split_minus_uv_rigid = false;  // split steps only
  bool redundantly_rigid = false;     // split steps only
  int degree = 0;                     // vertex additions only
  int num_vertices = 0;
  int num_edges = 0;
};

struct CertificateReport {
  std::vector<StepVerdict> steps;
  Graph final_graph;
  bool completed = false;       // every step applied
  bool pass_split_rigid = false;
  bool pass_split_redundant = false;
  // Optional numerical re-check of every split: uv-coincident rank of G'
  // reaches 2|V| - 2.
  std::optional<bool> numeric_recheck;
};

struct CertifyOptions {
  NormHandle numeric_norm;  // set to re-verify splits numerically
  int trials = 10;
  uint64_t seed = 1;
};

CertificateReport CertifySequence(const ConstructionSequence& seq,
                                  const CertifyOptions& options = {});

struct GeneratorParams {
  int target_size = 7;
  uint64_t seed = 1;
  // Probabilities of attempting each move; the rest goes to splits.
  double add_vertex_probability = 0.2;
  double add_edge_probability = 0.05;
  int retry_budget = 2000;
};

struct GeneratedGraph {
  Graph graph;
  ConstructionSequence sequence;
  CertificateReport report;
};

// Randomized forward search. Splits that fail the split-rigid check are
// discarded and retried. The returned report always passes split-rigid.
absl::StatusOr<GeneratedGraph> RandomCertifiedGraph(const GeneratorParams& params);

}  // namespace normrig

#endif  // NORMRIG_GLOBAL_RIGIDITY_H_
