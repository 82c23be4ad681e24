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

// Command-line front end. Verdicts go to `out`, diagnostics to `err`. Exit
// status is 0 whenever a verdict was computed, true or false; input and
// configuration errors exit with 1.

#ifndef NORMRIG_CLI_H_
#define NORMRIG_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace normrig {

inline constexpr uint64_t kDefaultSeed = 1;
inline constexpr const char* kSeedEnvVar = "NORMRIG_SEED";

enum class OutputFormat { kText, kJson };

struct CliConfig {
  // One of: rank, uv-rank, rigid, uv-rigid, check-sparse, check-uv-sparse,
  // cover-bound, uv-rigid-comb, op-apply, certify-global, generate-global,
  // experiment.
  std::string subcommand;
  std::vector<std::string> graph_paths;
  std::string norm = "lp:4";
  int trials = 10;
  uint64_t seed = kDefaultSeed;
  std::optional<double> tolerance;  // relative SVD threshold
  OutputFormat format = OutputFormat::kText;
  int verbosity = 0;

  // check-sparse
  int k = 2;
  int l = 2;
  // check-uv-sparse
  bool bruteforce = false;
  // op-apply
  std::string step;
  std::string h_file;
  std::optional<int> h_attach;  // vertex of H identified with w
  // certify-global
  bool numeric = false;
  // generate-global
  int size = 7;
  // experiment
  std::string experiment;
  std::optional<int> max_n;
  std::optional<int> samples;
  std::vector<std::string> norms;  // conjecture-probe
  std::string output_file;
  bool timing = false;
};

int Run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments (argv[0] is the program name) and runs.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

std::string VersionString();

}  // namespace normrig

#endif  // NORMRIG_CLI_H_
