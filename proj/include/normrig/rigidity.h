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

// Numerical side: rigidity matrices of frameworks in normed planes, their
// SVD rank, and multi-trial generic ranks for ordinary and uv-coincident
// placements.

#ifndef NORMRIG_RIGIDITY_H_
#define NORMRIG_RIGIDITY_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "absl/status/statusor.h"
#include "normrig/graph.h"
#include "normrig/normed_plane.h"

namespace normrig {

struct Framework {
  Graph graph;
  Placement placement;
  NormHandle norm;
  // uv-coincident convention: p_u == p_v and the matrix is built on G - uv.
  bool coincident = false;

  // Checks placement size, finiteness, and p_u == p_v when coincident.
  // Well-positionedness is checked when the matrix is built.
  static absl::StatusOr<Framework> Create(Graph graph, Placement placement,
                                          NormHandle norm,
                                          bool coincident = false);
};

struct RigidityMatrix {
  std::vector<Edge> rows;
  // Columns 2i and 2i+1 are the b1, b2 coordinates of graph.vertices()[i].
  std::vector<Vertex> column_vertices;
  Eigen::MatrixXd values;
};

// Row xy carries phi_{p_x - p_y} at x's columns and its negation at y's.
absl::StatusOr<RigidityMatrix> BuildRigidityMatrix(const Framework& f);

struct TolerancePolicy {
  // tau = relative * sigma_max * max(rows, cols)
  double relative = 1e-9;
};

struct RankDiagnostics {
  int rank = 0;
  double sigma_max = 0.0;
  double threshold = 0.0;
  double smallest_kept = 0.0;    // 0 when rank == 0
  double largest_dropped = 0.0;  // 0 when nothing was dropped
  // Smallest kept singular value within 10x of the threshold.
  bool near_threshold = false;
};

RankDiagnostics NumericalRankDetailed(const Eigen::MatrixXd& m,
                                      const TolerancePolicy& tol = {});
int NumericalRank(const Eigen::MatrixXd& m, const TolerancePolicy& tol = {});

// Orthonormal basis (as columns) of the numerical kernel.
Eigen::MatrixXd KernelBasis(const Eigen::MatrixXd& m,
                            const TolerancePolicy& tol = {});

struct RankOptions {
  int trials = 10;
  uint64_t seed = 1;
  double radius = 1.0;
  TolerancePolicy tol;
};

struct RankReport {
  int rank = 0;  // max over trials
  int trials = 0;
  std::vector<int> per_trial_ranks;
  TolerancePolicy tol;
  int rows = 0;  // |E|, or |E(G - uv)| for coincident placements
  int num_vertices = 0;
  int trivial_flex_dimension = 2;
  bool coincident = false;
  bool independent = false;
  bool infinitesimally_rigid = false;
  bool affine_span_ok = false;  // for the trial attaining the max
  // Fewer than 90% of trials reach the max, or the best trial's smallest
  // kept singular value sits within 10x of the threshold.
  bool unstable = false;
  int best_trial = -1;
  RankDiagnostics best_diagnostics;

  int TrialsAtMax() const;
};

// Derives the seed of trial t from the run seed.
uint64_t TrialSeed(uint64_t seed, int trial);

// Points affinely span the plane.
bool AffinelySpansPlane(const Placement& placement);

RankReport GenericRank(const Graph& g, const NormHandle& norm,
                       const RankOptions& options = {});
absl::StatusOr<RankReport> UvGenericRank(const Graph& g, const NormHandle& norm,
                                         const RankOptions& options = {});

// Merges two reports of the same graph and mode (max rank, trials appended).
RankReport MergeReports(const RankReport& a, const RankReport& b);

}  // namespace normrig

#endif  // NORMRIG_RIGIDITY_H_
