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

#include "normrig/rigidity.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace normrig {

absl::StatusOr<Framework> Framework::Create(Graph graph, Placement placement,
                                            NormHandle norm, bool coincident) {
  if (!norm) return absl::InvalidArgumentError("framework: missing norm");
  if (static_cast<int>(placement.size()) != graph.num_vertices())
    return absl::InvalidArgumentError(
        absl::StrCat("framework: placement has ", placement.size(),
                     " points for ", graph.num_vertices(), " vertices"));
  for (const PlanePoint& p : placement)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      return absl::InvalidArgumentError("framework: non-finite coordinate");
  if (coincident) {
    const auto& pair = graph.designated_pair();
    if (!pair)
      return absl::FailedPreconditionError(
          "coincident framework needs a designated pair");
    if (!(placement[graph.IndexOf(pair->u)] ==
          placement[graph.IndexOf(pair->v)]))
      return absl::InvalidArgumentError(
          "coincident framework needs p_u == p_v");
  }
  return Framework{std::move(graph), std::move(placement), std::move(norm),
                   coincident};
}

absl::StatusOr<RigidityMatrix> BuildRigidityMatrix(const Framework& f) {
  const Graph& g = f.graph;
  RigidityMatrix m;
  m.column_vertices = g.vertices();
  std::optional<Edge> skipped;
  if (f.coincident && g.designated_pair())
    skipped = Edge(g.designated_pair()->u, g.designated_pair()->v);
  for (const Edge& e : g.edges())
    if (!skipped || e != *skipped) m.rows.push_back(e);

  m.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows.size()),
                                   2 * g.num_vertices());
  for (size_t r = 0; r < m.rows.size(); ++r) {
    const Edge& e = m.rows[r];
    const int ia = g.IndexOf(e.a), ib = g.IndexOf(e.b);
    const PlanePoint d = f.placement[ia] - f.placement[ib];
    if (d.x == 0.0 && d.y == 0.0)
      return absl::InvalidArgumentError(
          absl::StrCat("framework is not well-positioned: edge ", e.a, "-",
                       e.b, " has zero length"));
    auto phi = f.norm->SupportFunctional(d);
    if (!phi.ok()) return phi.status();
    const auto row = static_cast<Eigen::Index>(r);
    m.values(row, 2 * ia) = phi->x;
    m.values(row, 2 * ia + 1) = phi->y;
    m.values(row, 2 * ib) = -phi->x;
    m.values(row, 2 * ib + 1) = -phi->y;
  }
  return m;
}

RankDiagnostics NumericalRankDetailed(const Eigen::MatrixXd& m,
                                      const TolerancePolicy& tol) {
  RankDiagnostics d;
  if (m.rows() == 0 || m.cols() == 0) return d;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  d.sigma_max = s.size() ? s(0) : 0.0;
  if (d.sigma_max == 0.0) return d;
  d.threshold = tol.relative * d.sigma_max *
                static_cast<double>(std::max(m.rows(), m.cols()));
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > d.threshold) {
      ++d.rank;
      d.smallest_kept = s(i);
    } else {
      d.largest_dropped = std::max(d.largest_dropped, s(i));
    }
  }
  d.near_threshold = d.rank > 0 && d.smallest_kept < 10.0 * d.threshold;
  return d;
}

int NumericalRank(const Eigen::MatrixXd& m, const TolerancePolicy& tol) {
  return NumericalRankDetailed(m, tol).rank;
}

Eigen::MatrixXd KernelBasis(const Eigen::MatrixXd& m,
                            const TolerancePolicy& tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const int rank = NumericalRank(m, tol);
  return svd.matrixV().rightCols(cols - rank);
}

int RankReport::TrialsAtMax() const {
  return static_cast<int>(
      std::count(per_trial_ranks.begin(), per_trial_ranks.end(), rank));
}

uint64_t TrialSeed(uint64_t seed, int trial) {
  // splitmix64 finalizer over (seed, trial)
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool AffinelySpansPlane(const Placement& placement) {
  if (placement.size() < 3) return false;
  const PlanePoint origin = placement[0];
  double scale = 0.0;
  size_t far = 0;
  for (size_t i = 1; i < placement.size(); ++i) {
    const PlanePoint d = placement[i] - origin;
    const double len = std::hypot(d.x, d.y);
    if (len > scale) {
      scale = len;
      far = i;
    }
  }
  if (scale == 0.0) return false;
  const PlanePoint axis = placement[far] - origin;
  for (const PlanePoint& p : placement) {
    const PlanePoint d = p - origin;
    if (std::abs(axis.x * d.y - axis.y * d.x) > 1e-12 * scale * scale)
      return true;
  }
  return false;
}

namespace {

void FinishVerdicts(const Graph& g, RankReport& report) {
  const int n = g.num_vertices();
  const int min_at_max = (9 * report.trials + 9) / 10;
  report.unstable = report.TrialsAtMax() < min_at_max ||
                    report.best_diagnostics.near_threshold;
  report.independent = report.rank == report.rows;
  if (report.coincident) {
    const auto& p = g.designated_pair();
    report.independent = report.independent && !g.HasEdge(p->u, p->v);
  }
  report.infinitesimally_rigid =
      n <= 1 || (report.affine_span_ok &&
                 report.rank == 2 * n - report.trivial_flex_dimension);
}

RankReport RunTrials(const Graph& g, const NormHandle& norm,
                     const RankOptions& options, bool coincident) {
  RankReport report;
  report.trials = std::max(1, options.trials);
  report.tol = options.tol;
  report.num_vertices = g.num_vertices();
  report.trivial_flex_dimension = norm->TrivialFlexDimension();
  report.coincident = coincident;
  report.rank = -1;
  std::optional<Edge> skipped;
  if (coincident) skipped = Edge(g.designated_pair()->u, g.designated_pair()->v);
  report.rows = g.num_edges() - (skipped && g.HasEdge(skipped->a, skipped->b));

  for (int t = 0; t < report.trials; ++t) {
    const uint64_t seed = TrialSeed(options.seed, t);
    auto placement = coincident
                         ? RandomUvCoincidentPlacement(g, options.radius, seed)
                         : RandomPlacement(g, options.radius, seed);
    int rank = 0;
    RankDiagnostics diag;
    bool spans = false;
    if (placement.ok()) {
      auto framework = Framework::Create(g, *placement, norm, coincident);
      absl::StatusOr<RigidityMatrix> matrix =
          framework.ok() ? BuildRigidityMatrix(*framework)
                         : absl::StatusOr<RigidityMatrix>(framework.status());
      // A failed build is a measure-zero non-well-positioned draw: rank 0.
      if (matrix.ok()) {
        diag = NumericalRankDetailed(matrix->values, options.tol);
        rank = diag.rank;
      }
      spans = AffinelySpansPlane(*placement);
    }
    report.per_trial_ranks.push_back(rank);
    if (rank > report.rank) {
      report.rank = rank;
      report.best_trial = t;
      report.best_diagnostics = diag;
      report.affine_span_ok = spans;
    }
  }
  FinishVerdicts(g, report);
  return report;
}

}  // namespace

RankReport GenericRank(const Graph& g, const NormHandle& norm,
                       const RankOptions& options) {
  return RunTrials(g, norm, options, /*coincident=*/false);
}

absl::StatusOr<RankReport> UvGenericRank(const Graph& g, const NormHandle& norm,
                                         const RankOptions& options) {
  if (!g.designated_pair())
    return absl::FailedPreconditionError(
        "uv_generic_rank: graph has no designated pair");
  return RunTrials(g, norm, options, /*coincident=*/true);
}

RankReport MergeReports(const RankReport& a, const RankReport& b) {
  RankReport out = a;
  out.trials = a.trials + b.trials;
  out.per_trial_ranks.insert(out.per_trial_ranks.end(),
                             b.per_trial_ranks.begin(),
                             b.per_trial_ranks.end());
  if (b.rank > a.rank) {
    out.rank = b.rank;
    out.best_trial = a.trials + b.best_trial;
    out.best_diagnostics = b.best_diagnostics;
    out.affine_span_ok = b.affine_span_ok;
    out.independent = b.independent;
    out.infinitesimally_rigid = b.infinitesimally_rigid;
  }
  if (b.rank > a.rank) {
    out.unstable = b.unstable;
  } else if (b.rank == a.rank) {
    out.unstable = a.unstable && b.unstable;
  }
  return out;
}

}  // namespace normrig
