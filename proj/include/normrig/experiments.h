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

// Sweeps that cross-check the count-matroid side against the rigidity
// matrix. Every sweep is deterministic given its configuration.

#ifndef NORMRIG_EXPERIMENTS_H_
#define NORMRIG_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "normrig/graph.h"
#include "normrig/normed_plane.h"
#include "normrig/rigidity.h"

namespace normrig {

struct Disagreement {
  std::string graph;   // graph text format
  std::string detail;  // both verdicts and ranks
  uint64_t seed = 0;
};

struct SweepReport {
  std::string name;
  int instances = 0;
  int agreements = 0;
  std::vector<Disagreement> disagreements;
  double runtime_seconds = 0.0;
  nlohmann::json config = nlohmann::json::object();
  // Named tallies: positives, retries, and so on.
  std::map<std::string, int> counters;

  bool ok() const { return disagreements.empty(); }
  // Runtime is left out unless asked for, so reruns compare equal.
  nlohmann::json ToJson(bool include_runtime = false) const;
  std::string ToText(bool include_runtime = false) const;
};

struct SweepConfig {
  NormHandle norm = DefaultNorm();
  int trials = 10;
  uint64_t seed = 1;
  // Unstable reports are retried with fresh seeds and merged by max rank.
  int max_retries = 3;
};

// Generic rank with the retry policy. `retries` receives the number of
// extra runs used.
RankReport StableGenericRank(const Graph& g, const SweepConfig& config,
                             uint64_t seed, int* retries = nullptr);
absl::StatusOr<RankReport> StableUvGenericRank(const Graph& g,
                                               const SweepConfig& config,
                                               uint64_t seed,
                                               int* retries = nullptr);

// Connected graphs, one per isomorphism class: IsRigidComb against the
// numerical rigidity verdict.
SweepReport RigiditySweep(int min_n, int max_n, const SweepConfig& config);

struct EquivalenceParams {
  int max_n = 6;  // exhaustive up to isomorphism, max_n <= 7
  int random_samples = 0;
  int random_min_n = 7;
  int random_max_n = 8;
};
// IsUvSparse against numerical uv-independence.
SweepReport EquivalenceSweep(const EquivalenceParams& params,
                             const SweepConfig& config);

struct DeleteContractParams {
  int samples = 500;
  int min_n = 3;
  int max_n = 8;
  int exhaustive_max_n = 0;  // also run every paired graph up to this size
  bool pinned = true;        // prepend the two-K4 graph and K_{2,3}
};
// IsUvRigidComb against numerical uv-rigidity.
SweepReport DeleteContractSweep(const DeleteContractParams& params,
                                const SweepConfig& config);

// Random applications of each independence-preserving move; every result
// must be uv-independent numerically and uv-sparse combinatorially.
SweepReport OperationPreservationSuite(int samples_per_operation,
                                       const SweepConfig& config);

// EquivalenceSweep repeated over several norms; an instance is one
// (graph, norm) pair. Counter "p_dependent" counts graphs whose numerical
// verdict changes with the norm.
SweepReport ConjectureProbe(const std::vector<NormHandle>& norms, int max_n,
                            const SweepConfig& config);

// Every graph up to isomorphism: CoverRankBound against the numerical
// generic rank.
SweepReport CoverBoundSweep(int max_n, const SweepConfig& config);

// Brute force against the reduced uv-sparsity search on every labelled graph
// with designated pair (0, 1), which covers every graph with every pair.
// Witnesses are re-validated independently.
SweepReport UvSparsityOracleSweep(int max_n);

// Support-functional identities on random nonzero z for each exponent:
// f(z) = |z|^2, sampled dual norm within bounds, homogeneity.
SweepReport SupportFunctionalAudit(const std::vector<double>& exponents,
                                   int samples, int unit_samples,
                                   uint64_t seed);

}  // namespace normrig

#endif  // NORMRIG_EXPERIMENTS_H_
