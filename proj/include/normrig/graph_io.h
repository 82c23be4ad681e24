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

// Graph text format:
//
//   n m [u v]
//   a b        (m lines, a < b, vertices 0..n-1)
//
// ASCII, newline terminated. The JSON form carries the same fields:
//   {"n": 4, "edges": [[0,1], ...], "designated_pair": [0,1]}

#ifndef NORMRIG_GRAPH_IO_H_
#define NORMRIG_GRAPH_IO_H_

#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "json.hpp"
#include "normrig/graph.h"

namespace normrig {

absl::StatusOr<Graph> ParseGraphText(absl::string_view text);
absl::StatusOr<Graph> ParseGraphJson(absl::string_view text);
// Dispatches on the first non-blank character ('{' means JSON).
absl::StatusOr<Graph> ParseGraph(absl::string_view text);
absl::StatusOr<Graph> ReadGraphFile(const std::string& path);

// Vertices are renumbered 0..n-1 in increasing id order.
std::string FormatGraphText(const Graph& g);
nlohmann::json GraphToJson(const Graph& g);

absl::StatusOr<std::string> ReadFileToString(const std::string& path);

}  // namespace normrig

#endif  // NORMRIG_GRAPH_IO_H_
