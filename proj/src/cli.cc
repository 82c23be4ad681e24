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

#include "normrig/cli.h"

#include <fstream>
#include <map>
#include <sstream>

#include <Eigen/Core>

#include "CLI11.hpp"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"
#include "normrig/experiments.h"
#include "normrig/global_rigidity.h"
#include "normrig/graph_io.h"
#include "normrig/normed_plane.h"
#include "normrig/operations.h"
#include "normrig/rigidity.h"
#include "normrig/sparsity.h"

#ifndef NORMRIG_VERSION
#define NORMRIG_VERSION "0.0.0"
#endif

namespace normrig {
namespace {

using nlohmann::json;

const char* YesNo(bool b) { return b ? "yes" : "no"; }

std::string SetsToString(const std::vector<std::vector<Vertex>>& sets) {
  std::vector<std::string> parts;
  for (const auto& s : sets) parts.push_back(absl::StrCat("{", absl::StrJoin(s, ","), "}"));
  return absl::StrJoin(parts, ",");
}

// Shared state for one invocation.
class Command {
 public:
  Command(const CliConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  int Fail(absl::string_view field, absl::string_view message) {
    err_ << "error: " << field << ": " << message << "\n";
    return 1;
  }

  bool structured() const { return config_.format == OutputFormat::kJson; }

  json Envelope(json result) const {
    json j;
    j["command"] = config_.subcommand;
    if (!config_.graph_paths.empty()) j["input"] = config_.graph_paths.front();
    j["norm"] = config_.norm;
    j["trials"] = config_.trials;
    j["seed"] = config_.seed;
    if (config_.tolerance) j["tolerance"] = *config_.tolerance;
    j["result"] = std::move(result);
    return j;
  }

  void Emit(const json& result, const std::string& text) {
    if (structured())
      out_ << Envelope(result).dump(2) << "\n";
    else
      out_ << text;
  }

  absl::StatusOr<Graph> LoadGraph() {
    if (config_.graph_paths.empty())
      return absl::InvalidArgumentError("no graph file given");
    return ReadGraphFile(config_.graph_paths.front());
  }

  absl::StatusOr<NormHandle> LoadNorm() { return ParseNorm(config_.norm); }

  RankOptions Options() const {
    RankOptions opts;
    opts.trials = config_.trials;
    opts.seed = config_.seed;
    if (config_.tolerance) opts.tol.relative = *config_.tolerance;
    return opts;
  }

  static json RankJson(const RankReport& r) {
    return {{"rank", r.rank},
            {"rows", r.rows},
            {"vertices", r.num_vertices},
            {"trials", r.trials},
            {"per_trial_ranks", r.per_trial_ranks},
            {"trials_at_max", r.TrialsAtMax()},
            {"coincident", r.coincident},
            {"independent", r.independent},
            {"rigid", r.infinitesimally_rigid},
            {"affine_span_ok", r.affine_span_ok},
            {"unstable", r.unstable},
            {"sigma_max", r.best_diagnostics.sigma_max},
            {"threshold", r.best_diagnostics.threshold},
            {"smallest_kept", r.best_diagnostics.smallest_kept},
            {"largest_dropped", r.best_diagnostics.largest_dropped}};
  }

  void WarnIfUnstable(const RankReport& r) {
    if (r.unstable)
      err_ << "warning: numerical rank is unstable (" << r.TrialsAtMax() << "/"
           << r.trials << " trials at the maximum)\n";
    if (config_.verbosity > 0)
      err_ << "per-trial ranks: " << absl::StrJoin(r.per_trial_ranks, " ")
           << "\n";
  }

  int RunRank(bool coincident, bool rigidity_only) {
    auto g = LoadGraph();
    if (!g.ok()) return Fail("graph", g.status().message());
    auto norm = LoadNorm();
    if (!norm.ok()) return Fail("--norm", norm.status().message());
    absl::StatusOr<RankReport> r =
        coincident ? UvGenericRank(*g, *norm, Options())
                   : absl::StatusOr<RankReport>(GenericRank(*g, *norm, Options()));
    if (!r.ok()) return Fail("graph", r.status().message());
    WarnIfUnstable(*r);
    const int needed = 2 * r->num_vertices - r->trivial_flex_dimension;
    const char* prefix = coincident ? "uv-" : "";
    std::string text;
    if (rigidity_only) {
      text = absl::StrFormat("%srigid: %s (rank %d, needed %d)\n", prefix,
                             YesNo(r->infinitesimally_rigid), r->rank, needed);
    } else {
      text = absl::StrFormat("rank %d / edges %d / %sindependent: %s / %srigid: %s\n",
                             r->rank, r->rows, prefix, YesNo(r->independent),
                             prefix, YesNo(r->infinitesimally_rigid));
    }
    Emit(RankJson(*r), text);
    return 0;
  }

  int RunCheckSparse() {
    auto g = LoadGraph();
    if (!g.ok()) return Fail("graph", g.status().message());
    auto report = CheckSparse(*g, config_.k, config_.l);
    if (!report.ok()) return Fail("--k/--l", report.status().message());
    json j = {{"k", config_.k},          {"l", config_.l},
              {"sparse", report->sparse}, {"tight", report->tight},
              {"rank", report->rank},     {"edges", g->num_edges()}};
    std::string text = absl::StrFormat("(%d,%d)-sparse: %s; tight: %s; rank %d / edges %d",
                                       config_.k, config_.l, YesNo(report->sparse),
                                       YesNo(report->tight), report->rank,
                                       g->num_edges());
    if (report->rejected_edge) {
      const Edge e = *report->rejected_edge;
      j["witness"] = {{"edge", {e.a, e.b}},
                      {"set", report->violating_set},
                      {"edges_in_set", report->violating_count},
                      {"bound", report->violating_bound}};
      absl::StrAppend(&text, absl::StrFormat(
                                 "; witness: edge %d %d in {%s}: %d edges > %d",
                                 e.a, e.b, absl::StrJoin(report->violating_set, ","),
                                 report->violating_count, report->violating_bound));
    }
    Emit(j, text + "\n");
    return 0;
  }

  int RunCheckUvSparse() {
    auto g = LoadGraph();
    if (!g.ok()) return Fail("graph", g.status().message());
    auto r = config_.bruteforce ? IsUvSparseBruteForce(*g) : IsUvSparse(*g);
    if (!r.ok()) return Fail("graph", r.status().message());
    json j = {{"uv_sparse", r->sparse},
              {"method", config_.bruteforce ? "bruteforce" : "reduced"}};
    std::string text = absl::StrCat("uv-sparse: ", YesNo(r->sparse));
    if (!r->sparse) {
      absl::StrAppend(&text, "; ", WitnessToString(r->witness));
      if (const auto* s = std::get_if<SetWitness>(&r->witness)) {
        j["witness"] = {{"kind", "set"}, {"sets", {s->set}},
                        {"covered", s->covered}, {"value", s->value}};
      } else if (const auto* f = std::get_if<FamilyWitness>(&r->witness)) {
        j["witness"] = {{"kind", "family"}, {"sets", f->family.sets},
                        {"covered", f->covered}, {"value", f->value}};
      }
    }
    Emit(j, text + "\n");
    return 0;
  }

  int RunCoverBound() {
    auto g = LoadGraph();
    if (!g.ok()) return Fail("graph", g.status().message());
    auto r = CoverRankBound(*g);
    if (!r.ok()) return Fail("graph", r.status().message());
    Emit({{"bound", r->bound}, {"cover", r->cover}},
         absl::StrCat("cover bound: ", r->bound, "; cover ",
                      SetsToString(r->cover), "\n"));
    return 0;
  }

  int RunUvRigidComb() {
    auto g = LoadGraph();
    if (!g.ok()) return Fail("graph", g.status().message());
    auto verdict = IsUvRigidComb(*g);
    if (!verdict.ok()) return Fail("graph", verdict.status().message());
    const auto& p = *g->designated_pair();
    const Graph minus = WithoutEdge(*g, p.u, p.v);
    const Graph contracted = *ContractPair(*g, p.u, p.v);
    const bool minus_rigid = IsRigidComb(minus);
    const bool contracted_rigid = IsRigidComb(contracted);
    Emit({{"uv_rigid", *verdict},
          {"minus_uv_rigid", minus_rigid},
          {"contraction_rigid", contracted_rigid},
          {"contraction_vertices", contracted.num_vertices()},
          {"contraction_edges", contracted.num_edges()}},
         absl::StrFormat(
             "uv-rigid-comb: %s; G-uv rigid: %s; G/uv rigid: %s (%d vertices, "
             "%d edges)\n",
             YesNo(*verdict), YesNo(minus_rigid), YesNo(contracted_rigid),
             contracted.num_vertices(), contracted.num_edges()));
    return 0;
  }

  // vertextoh w | x:y ...  with y in H's own vertex ids.
  absl::StatusOr<Graph> ApplyVertexToH(const Graph& g, absl::string_view rest) {
    if (config_.h_file.empty())
      return absl::InvalidArgumentError("vertextoh needs --h-file");
    auto h = ReadGraphFile(config_.h_file);
    if (!h.ok()) return h.status();
    std::vector<absl::string_view> parts = absl::StrSplit(rest, '|');
    if (parts.size() != 2)
      return absl::InvalidArgumentError("vertextoh needs 'w | x:y ...'");
    int w = 0;
    if (!absl::SimpleAtoi(absl::StripAsciiWhitespace(parts[0]), &w))
      return absl::InvalidArgumentError("vertextoh: bad vertex w");
    Vertex h_w = h->vertices().empty() ? 0 : h->vertices().front();
    if (config_.h_attach) {
      h_w = *config_.h_attach;
    } else if (h->designated_pair()) {
      h_w = h->designated_pair()->v;
    }
    if (!h->HasVertex(h_w))
      return absl::InvalidArgumentError("--h-attach is not a vertex of H");
    if (!g.HasVertex(w)) return absl::InvalidArgumentError("w is not a vertex");
    std::map<Vertex, Vertex> mapping;
    const Graph embedded = EmbedAttachedGraph(g, w, *h, h_w, &mapping);
    std::map<Vertex, Vertex> reassignment;
    for (absl::string_view tok :
         absl::StrSplit(parts[1], absl::ByAnyChar(" \t"), absl::SkipWhitespace())) {
      std::vector<absl::string_view> xy = absl::StrSplit(tok, ':');
      int x = 0, y = 0;
      if (xy.size() != 2 || !absl::SimpleAtoi(xy[0], &x) ||
          !absl::SimpleAtoi(xy[1], &y))
        return absl::InvalidArgumentError(
            absl::StrCat("vertextoh: bad reassignment '", tok, "'"));
      if (!mapping.count(y))
        return absl::InvalidArgumentError(
            absl::StrCat("vertextoh: ", y, " is not a vertex of H"));
      reassignment[x] = mapping[y];
    }
    return VertexToHMove(g, w, embedded, reassignment);
  }

  absl::StatusOr<Graph> ApplyStepText(const Graph& g) {
    absl::string_view rest = absl::StripAsciiWhitespace(config_.step);
    std::vector<int> args;
    auto parse_args = [&](absl::string_view text, size_t count) -> absl::Status {
      for (absl::string_view tok :
           absl::StrSplit(text, absl::ByAnyChar(" \t"), absl::SkipWhitespace())) {
        int x = 0;
        if (!absl::SimpleAtoi(tok, &x))
          return absl::InvalidArgumentError(absl::StrCat("bad vertex '", tok, "'"));
        args.push_back(x);
      }
      if (args.size() != count)
        return absl::InvalidArgumentError(
            absl::StrCat("expected ", count, " vertices"));
      return absl::OkStatus();
    };
    if (absl::ConsumePrefix(&rest, "vertextoh ")) return ApplyVertexToH(g, rest);
    if (absl::ConsumePrefix(&rest, "contract ")) {
      if (auto s = parse_args(rest, 2); !s.ok()) return s;
      return ContractPair(g, args[0], args[1]);
    }
    if (absl::ConsumePrefix(&rest, "deleteedge ")) {
      if (auto s = parse_args(rest, 2); !s.ok()) return s;
      return DeleteEdge(g, args[0], args[1]);
    }
    if (absl::ConsumePrefix(&rest, "deletevertex ")) {
      if (auto s = parse_args(rest, 1); !s.ok()) return s;
      return DeleteVertex(g, args[0]);
    }
    auto step = ParseStep(rest);
    if (!step.ok()) return step.status();
    if (auto* fc = std::get_if<VertexToFourCycle>(&*step))
      *fc = CompleteFourCycle(g, *fc);
    return ApplyStep(g, *step);
  }

  int RunOpApply() {
    auto g = LoadGraph();
    if (!g.ok()) return Fail("graph", g.status().message());
    auto result = ApplyStepText(*g);
    if (!result.ok()) return Fail("step", result.status().message());
    bool renumbered = false;
    for (int i = 0; i < result->num_vertices(); ++i)
      renumbered |= result->vertices()[i] != i;
    if (renumbered && !structured())
      err_ << "note: vertex ids renumbered; old ids in order: "
           << absl::StrJoin(result->vertices(), " ") << "\n";
    Emit({{"graph", GraphToJson(*result)}, {"vertex_ids", result->vertices()}},
         FormatGraphText(*result));
    return 0;
  }

  static json CertificateJson(const CertificateReport& r) {
    json steps = json::array();
    for (const StepVerdict& s : r.steps) {
      json j = {{"step", s.step},       {"applied", s.applied},
                {"vertices", s.num_vertices}, {"edges", s.num_edges}};
      if (!s.error.empty()) j["error"] = s.error;
      if (s.is_split) {
        j["split_minus_uv_rigid"] = s.split_minus_uv_rigid;
        j["redundantly_rigid"] = s.redundantly_rigid;
      }
      if (s.degree) j["degree"] = s.degree;
      steps.push_back(std::move(j));
    }
    json j = {{"steps", steps},
              {"completed", r.completed},
              {"split_rigid", r.pass_split_rigid},
              {"split_redundant", r.pass_split_redundant},
              {"final_vertices", r.final_graph.num_vertices()},
              {"final_edges", r.final_graph.num_edges()},
              {"final_graph", GraphToJson(r.final_graph)}};
    if (r.numeric_recheck) j["numeric_recheck"] = *r.numeric_recheck;
    return j;
  }

  static std::string CertificateText(const CertificateReport& r,
                                     absl::string_view prefix) {
    std::string text;
    for (size_t i = 0; i < r.steps.size(); ++i) {
      const StepVerdict& s = r.steps[i];
      absl::StrAppend(&text, prefix, "step ", i + 1, ": ", s.step);
      if (!s.applied) {
        absl::StrAppend(&text, ": rejected: ", s.error, "\n");
        continue;
      }
      if (s.is_split)
        absl::StrAppend(&text, "; G'-uv rigid: ", YesNo(s.split_minus_uv_rigid),
                        "; redundantly rigid: ", YesNo(s.redundantly_rigid));
      if (s.degree) absl::StrAppend(&text, "; degree ", s.degree);
      absl::StrAppend(&text, "\n");
    }
    absl::StrAppend(
        &text, prefix,
        absl::StrFormat("final graph: %d vertices, %d edges; completed: %s\n",
                        r.final_graph.num_vertices(), r.final_graph.num_edges(),
                        YesNo(r.completed)),
        prefix, "split-rigid: ", r.pass_split_rigid ? "pass" : "fail", "\n",
        prefix, "split-redundant: ", r.pass_split_redundant ? "pass" : "fail",
        "\n");
    if (r.numeric_recheck)
      absl::StrAppend(&text, prefix, "numeric re-check: ",
                      *r.numeric_recheck ? "pass" : "fail", "\n");
    return text;
  }

  int RunCertifyGlobal() {
    if (config_.graph_paths.empty()) return Fail("sequence", "no file given");
    auto text = ReadFileToString(config_.graph_paths.front());
    if (!text.ok()) return Fail("sequence", text.status().message());
    auto seq = ParseSequence(*text);
    if (!seq.ok())
      return Fail("sequence", absl::StrCat(config_.graph_paths.front(), ": ",
                                           seq.status().message()));
    CertifyOptions options;
    options.trials = config_.trials;
    options.seed = config_.seed;
    if (config_.numeric) {
      auto norm = LoadNorm();
      if (!norm.ok()) return Fail("--norm", norm.status().message());
      options.numeric_norm = *norm;
    }
    const CertificateReport report = CertifySequence(*seq, options);
    Emit(CertificateJson(report), CertificateText(report, ""));
    return 0;
  }

  int RunGenerateGlobal() {
    GeneratorParams params;
    params.target_size = config_.size;
    params.seed = config_.seed;
    auto generated = RandomCertifiedGraph(params);
    if (!generated.ok()) return Fail("--size", generated.status().message());
    json j = CertificateJson(generated->report);
    j["sequence"] = FormatSequence(generated->sequence);
    Emit(j, FormatSequence(generated->sequence) +
                CertificateText(generated->report, "# "));
    return 0;
  }

  int RunExperiment() {
    auto norm = LoadNorm();
    if (!norm.ok()) return Fail("--norm", norm.status().message());
    SweepConfig sweep;
    sweep.norm = *norm;
    sweep.trials = config_.trials;
    sweep.seed = config_.seed;
    const std::string& name = config_.experiment;
    auto max_n = [&](int fallback) { return config_.max_n.value_or(fallback); };
    auto samples = [&](int fallback) { return config_.samples.value_or(fallback); };
    SweepReport report;
    if (name == "rigidity") {
      report = RigiditySweep(3, max_n(6), sweep);
    } else if (name == "equivalence") {
      EquivalenceParams params;
      params.max_n = max_n(6);
      params.random_samples = samples(200);
      if (params.max_n > 7) return Fail("--max-n", "exhaustive mode needs max-n <= 7");
      report = EquivalenceSweep(params, sweep);
    } else if (name == "delete-contract") {
      DeleteContractParams params;
      params.samples = samples(500);
      params.max_n = max_n(8);
      if (params.max_n > 8 || params.max_n < params.min_n)
        return Fail("--max-n", "must lie in [3, 8]");
      report = DeleteContractSweep(params, sweep);
    } else if (name == "operations") {
      report = OperationPreservationSuite(samples(100), sweep);
    } else if (name == "conjecture-probe") {
      std::vector<NormHandle> norms;
      const std::vector<std::string> specs =
          config_.norms.empty()
              ? std::vector<std::string>{"lp:1.2", "lp:1.5", "lp:3", "lp:4", "lp:7"}
              : config_.norms;
      for (const std::string& spec : specs) {
        auto n = ParseNorm(spec);
        if (!n.ok()) return Fail("--norms", n.status().message());
        norms.push_back(*n);
      }
      report = ConjectureProbe(norms, max_n(5), sweep);
    } else if (name == "cover-bound") {
      if (max_n(5) > 7) return Fail("--max-n", "must be at most 7");
      report = CoverBoundSweep(max_n(5), sweep);
    } else if (name == "uv-sparsity-oracles") {
      if (max_n(6) > 7) return Fail("--max-n", "must be at most 7");
      report = UvSparsityOracleSweep(max_n(6));
    } else if (name == "support-functional") {
      report = SupportFunctionalAudit({1.5, 3, 4, 7}, samples(10000), 10000,
                                      config_.seed);
    } else {
      return Fail("experiment", absl::StrCat("unknown experiment '", name, "'"));
    }
    const std::string rendered =
        structured() ? report.ToJson(config_.timing).dump(2) + "\n"
               : report.ToText(config_.timing);
    out_ << rendered;
    if (!config_.output_file.empty()) {
      std::ofstream file(config_.output_file);
      if (!file) return Fail("--output", "cannot write file");
      file << rendered;
    }
    return 0;
  }

 private:
  const CliConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

std::string VersionString() {
  return absl::StrFormat("normrig %s (C++%d, Eigen %d.%d.%d)", NORMRIG_VERSION,
                         static_cast<int>(__cplusplus / 100 % 100),
                         EIGEN_WORLD_VERSION, EIGEN_MAJOR_VERSION,
                         EIGEN_MINOR_VERSION);
}

int Run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Command cmd(config, out, err);
  if (config.trials < 1) return cmd.Fail("--trials", "must be at least 1");
  if (config.tolerance && !(*config.tolerance > 0))
    return cmd.Fail("--tol", "must be positive");
  const std::string& s = config.subcommand;
  if (s == "rank") return cmd.RunRank(false, false);
  if (s == "uv-rank") return cmd.RunRank(true, false);
  if (s == "rigid") return cmd.RunRank(false, true);
  if (s == "uv-rigid") return cmd.RunRank(true, true);
  if (s == "check-sparse") return cmd.RunCheckSparse();
  if (s == "check-uv-sparse") return cmd.RunCheckUvSparse();
  if (s == "cover-bound") return cmd.RunCoverBound();
  if (s == "uv-rigid-comb") return cmd.RunUvRigidComb();
  if (s == "op-apply") return cmd.RunOpApply();
  if (s == "certify-global") return cmd.RunCertifyGlobal();
  if (s == "generate-global") return cmd.RunGenerateGlobal();
  if (s == "experiment") return cmd.RunExperiment();
  return cmd.Fail("subcommand", absl::StrCat("unknown subcommand '", s, "'"));
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CliConfig config;
  CLI::App app{"Rigidity and coincident-point rigidity in lp normed planes",
               "normrig"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", VersionString());

  app.add_option("--norm", config.norm, "Norm descriptor lp:<p>, 1 < p, p != 2")
      ->capture_default_str();
  app.add_option("--trials", config.trials, "Random placements per rank query")
      ->capture_default_str();
  app.add_option("--seed", config.seed,
                 absl::StrCat("Base seed (default ", kDefaultSeed, ", or $",
                              kSeedEnvVar, ")"))
      ->envname(kSeedEnvVar);
  std::optional<double> tol;
  app.add_option("--tol", tol, "Relative SVD threshold (default 1e-9)");
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON record");
  app.add_flag("-v,--verbose", config.verbosity, "More diagnostics on stderr");

  auto graph_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", config.graph_paths, "Graph file")->required();
    return sub;
  };
  graph_command("rank", "Generic rank of the rigidity matrix");
  graph_command("uv-rank", "Generic rank with u and v coincident");
  graph_command("rigid", "Numerical rigidity verdict");
  graph_command("uv-rigid", "Numerical uv-rigidity verdict");
  CLI::App* sparse = graph_command("check-sparse", "(k,l)-sparsity by pebble game");
  sparse->add_option("--k", config.k)->capture_default_str();
  sparse->add_option("--l", config.l)->capture_default_str();
  graph_command("check-uv-sparse", "uv-sparsity with witness")
      ->add_flag("--bruteforce", config.bruteforce, "Exhaustive family search");
  graph_command("cover-bound", "Minimum cover bound on the generic rank");
  graph_command("uv-rigid-comb", "G-uv and G/uv both rigid");

  CLI::App* op = app.add_subcommand("op", "Graph operations");
  op->require_subcommand(1);
  CLI::App* apply = op->add_subcommand("apply", "Apply one step and print the graph");
  std::string op_graph;
  apply->add_option("graph", op_graph, "Graph file")->required();
  apply->add_option("step", config.step, "Step, e.g. 'zeroext 0 1 -> 4'")->required();
  apply->add_option("--h-file", config.h_file, "Graph H for vertextoh");
  apply->add_option("--h-attach", config.h_attach, "Vertex of H identified with w");

  CLI::App* certify = app.add_subcommand("certify-global", "Certify a construction sequence");
  certify->add_option("sequence", config.graph_paths, "Sequence file")->required();
  certify->add_flag("--numeric", config.numeric, "Re-check splits numerically");

  CLI::App* generate = app.add_subcommand("generate-global", "Random certified sequence");
  generate->add_option("--size", config.size, "Target vertex count")
      ->capture_default_str()
      ->check(CLI::Range(5, 64));

  CLI::App* experiment = app.add_subcommand("experiment", "Run a sweep");
  experiment
      ->add_option("name", config.experiment,
                   "rigidity | equivalence | delete-contract | operations | "
                   "conjecture-probe | cover-bound | uv-sparsity-oracles | "
                   "support-functional")
      ->required();
  experiment->add_option("--max-n", config.max_n, "Largest vertex count");
  experiment->add_option("--samples", config.samples, "Random samples");
  experiment->add_option("--norms", config.norms, "Norms for conjecture-probe");
  experiment->add_option("--output", config.output_file, "Also write the report here");
  experiment->add_flag("--timing", config.timing, "Include runtime in the report");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("normrig");
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  config.tolerance = tol;
  config.format = as_json ? OutputFormat::kJson : OutputFormat::kText;
  for (CLI::App* sub : app.get_subcommands()) {
    config.subcommand = sub->get_name();
    if (sub == op) {
      config.subcommand = "op-apply";
      config.graph_paths = {op_graph};
    }
  }
  return Run(config, out, err);
}

}  // namespace normrig
