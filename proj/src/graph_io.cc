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

#include "normrig/graph_io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "absl/strings/string_view.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace normrig {
namespace {

absl::StatusOr<std::vector<int>> ParseInts(absl::string_view line, int line_no) {
  std::vector<int> out;
  for (absl::string_view tok : absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipWhitespace())) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      return absl::InvalidArgumentError(
          absl::StrCat("bad integer '", tok, "' at line ", line_no));
    out.push_back(value);
  }
  return out;
}

absl::Status LineError(absl::string_view what, int line_no) {
  return absl::InvalidArgumentError(absl::StrCat(what, " at line ", line_no));
}

}  // namespace

absl::StatusOr<Graph> ParseGraphText(absl::string_view text) {
  std::vector<absl::string_view> lines = absl::StrSplit(text, '\n');
  size_t idx = 0;
  auto next_line = [&](int* line_no) -> std::optional<absl::string_view> {
    while (idx < lines.size()) {
      absl::string_view line = absl::StripAsciiWhitespace(lines[idx++]);
      *line_no = static_cast<int>(idx);
      if (!line.empty()) return line;
    }
    return std::nullopt;
  };

  int line_no = 0;
  auto header_line = next_line(&line_no);
  if (!header_line) return absl::InvalidArgumentError("empty graph file");
  auto header = ParseInts(*header_line, line_no);
  if (!header.ok()) return header.status();
  if (header->size() != 2 && header->size() != 4)
    return LineError("header must be 'n m [u v]'", line_no);
  const int n = (*header)[0], m = (*header)[1];
  if (n < 0 || m < 0) return LineError("negative count in header", line_no);
  std::optional<VertexPair> pair;
  if (header->size() == 4) {
    const int u = (*header)[2], v = (*header)[3];
    if (u == v) return LineError("designated pair has equal endpoints", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      return LineError("designated pair out of range", line_no);
    pair = VertexPair{u, v};
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (int i = 0; i < m; ++i) {
    auto line = next_line(&line_no);
    if (!line)
      return absl::InvalidArgumentError(
          absl::StrCat("expected ", m, " edges, found ", i));
    auto ends = ParseInts(*line, line_no);
    if (!ends.ok()) return ends.status();
    if (ends->size() != 2) return LineError("edge line must be 'a b'", line_no);
    const int a = (*ends)[0], b = (*ends)[1];
    if (a < 0 || a >= n || b < 0 || b >= n)
      return LineError("vertex out of range", line_no);
    if (a == b) return LineError("loop", line_no);
    const Edge e(a, b);
    if (!seen.insert(e).second) return LineError("parallel edge", line_no);
    edges.push_back(e);
  }
  if (next_line(&line_no))
    return LineError("unexpected content after the edge list", line_no);

  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  return Graph::Create(std::move(vs), std::move(edges), pair);
}

absl::StatusOr<Graph> ParseGraphJson(absl::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object())
    return absl::InvalidArgumentError("graph JSON: not an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    return absl::InvalidArgumentError("graph JSON: field 'n' missing or not an integer");
  const int n = j["n"].get<int>();
  if (n < 0) return absl::InvalidArgumentError("graph JSON: negative 'n'");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      return absl::InvalidArgumentError("graph JSON: field 'edges' is not an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        return absl::InvalidArgumentError("graph JSON: edge must be [a, b]");
      const int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || a >= n || b < 0 || b >= n)
        return absl::InvalidArgumentError("graph JSON: edge endpoint out of range");
      edges.emplace_back(a, b);
    }
  }
  std::optional<VertexPair> pair;
  if (j.contains("designated_pair") && !j["designated_pair"].is_null()) {
    const auto& p = j["designated_pair"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      return absl::InvalidArgumentError(
          "graph JSON: field 'designated_pair' must be [u, v]");
    pair = VertexPair{p[0].get<int>(), p[1].get<int>()};
  }
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  return Graph::Create(std::move(vs), std::move(edges), pair);
}

absl::StatusOr<Graph> ParseGraph(absl::string_view text) {
  const absl::string_view trimmed = absl::StripLeadingAsciiWhitespace(text);
  if (!trimmed.empty() && trimmed.front() == '{') return ParseGraphJson(text);
  return ParseGraphText(text);
}

absl::StatusOr<std::string> ReadFileToString(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read file ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::StatusOr<Graph> ReadGraphFile(const std::string& path) {
  auto text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  auto g = ParseGraph(*text);
  if (!g.ok())
    return absl::Status(g.status().code(),
                        absl::StrCat(path, ": ", g.status().message()));
  return g;
}

std::string FormatGraphText(const Graph& g) {
  std::string out = absl::StrCat(g.num_vertices(), " ", g.num_edges());
  if (const auto& p = g.designated_pair())
    absl::StrAppend(&out, " ", g.IndexOf(p->u), " ", g.IndexOf(p->v));
  out += "\n";
  for (const Edge& e : g.edges())
    absl::StrAppend(&out, g.IndexOf(e.a), " ", g.IndexOf(e.b), "\n");
  return out;
}

nlohmann::json GraphToJson(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges())
    j["edges"].push_back({g.IndexOf(e.a), g.IndexOf(e.b)});
  if (const auto& p = g.designated_pair())
    j["designated_pair"] = {g.IndexOf(p->u), g.IndexOf(p->v)};
  else
    j["designated_pair"] = nullptr;
  return j;
}

}  // namespace normrig
