// Copyright 2026 The cmt-bigraph Authors.
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

// cmt: command-line front end. Every command prints one JSON run report
//   {command, input_digest, result, timing_ms, status}
// and exits 0 (ok), 2 (disagreement, verify only) or 1 (error).

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cmt/classify.hpp"
#include "cmt/complex.hpp"
#include "cmt/construct.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/errors.hpp"
#include "cmt/fixtures.hpp"
#include "cmt/json_io.hpp"

namespace {

using cmt::Json;

constexpr std::size_t kOracleMaxVertices = 20;

enum class Status { kOk, kDisagreement, kError };

struct Outcome {
  Json result;
  Status status = Status::kOk;
};

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw cmt::Error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

struct Input {
  std::string path;
  std::string builtin;

  // Document text; the digest covers exactly these bytes.
  std::string read() const {
    if (!builtin.empty()) return std::string(cmt::builtin_document(builtin).value());
    if (path.empty()) throw cmt::Error("no input: give a path or --builtin");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cmt::Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

void AddInput(CLI::App* cmd, Input* input) {
  cmd->add_option("path", input->path, "graph document");
  cmd->add_option("--builtin", input->builtin, "built-in fixture")
      ->check(CLI::IsMember(cmt::builtin_names()));
}

Json GraphSummary(const cmt::BipartiteGraph& g) {
  return Json{{"left", g.left_size()}, {"right", g.right_size()}, {"edges", g.edge_count()}};
}

Outcome Classify(const std::string& text) {
  const cmt::BipartiteGraph g = cmt::parse_graph(text);
  Json r = cmt::to_json(g, cmt::classify(g));
  r["graph"] = GraphSummary(g);
  return {r};
}

Outcome Oracle(const std::string& text, int max_t) {
  const cmt::BipartiteGraph g = cmt::parse_graph(text);
  if (g.vertex_count() > kOracleMaxVertices) {
    throw cmt::SizeLimitError("oracle supports at most " + std::to_string(kOracleMaxVertices) +
                              " vertices, got " + std::to_string(g.vertex_count()));
  }
  Json r = cmt::oracle_to_json(cmt::independence_complex(g), max_t);
  r["graph"] = GraphSummary(g);
  return {r};
}

Outcome Verify(std::size_t d) {
  const cmt::UnmixedVerification v = cmt::verify_unmixed(d);
  return {cmt::to_json(v), v.ok() ? Status::kOk : Status::kDisagreement};
}

Outcome Expand(const std::string& text) {
  const cmt::Expansion e = cmt::parse_expansion(text);
  const cmt::ExpandedGraph x = cmt::expand(e);
  Json r;
  r["document"] = cmt::format_graph(x.graph);
  r["graph"] = GraphSummary(x.graph);
  r["predicted_codim"] = cmt::predicted_codim(e);
  return {r};
}

Outcome Contract(const std::string& text) {
  const cmt::Expansion e = cmt::contract(cmt::parse_graph(text));
  Json r;
  r["document"] = cmt::format_expansion(e);
  r["multiplicities"] = e.multiplicities;
  r["predicted_codim"] = cmt::predicted_codim(e);
  return {r};
}

void WriteFile(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw cmt::Error("cannot write " + p.string());
}

struct EnumerateArgs {
  std::optional<int> cm;
  std::optional<int> cmt;
  std::size_t max_total = 0;
  std::string out;
};

Outcome Enumerate(const EnumerateArgs& a) {
  namespace fs = std::filesystem;
  if (a.cm.has_value() == a.cmt.has_value()) throw cmt::Error("give exactly one of --cm, --cmt");
  Json manifest;
  Json r;
  std::vector<std::pair<std::string, std::string>> files;  // name, document
  std::vector<std::pair<std::string, std::string>> extra;
  if (a.cm) {
    const auto graphs = cmt::enumerate_cm(*a.cm);
    std::size_t connected = 0;
    for (const auto& g : graphs) {
      connected += cmt::is_connected(g) ? 1 : 0;
      files.emplace_back(cmt::canonical_form(g).to_string() + ".graph", cmt::format_graph(g));
    }
    r["mode"] = "cm";
    manifest["dimension_or_t"] = *a.cm;
    manifest["count"] = graphs.size();
    manifest["connected_count"] = connected;
  } else {
    cmt::SharpCmtOptions options;
    options.max_total = a.max_total;
    const cmt::SharpCmtFamily f = cmt::enumerate_sharp_cmt(*a.cmt, options);
    Json entries = Json::array();
    for (const auto& e : f.entries) {
      entries.push_back(cmt::to_json(e));
      files.emplace_back(e.code.to_string() + ".graph", cmt::format_graph(e.graph));
    }
    for (const auto& e : f.representatives) {
      extra.emplace_back(e.code.to_string() + ".graph", cmt::format_graph(e.graph));
    }
    Json by_dim = Json::array();
    for (const auto& s : f.by_base_dimension) by_dim.push_back(cmt::to_json(s));
    r["mode"] = "cmt";
    r["by_base_dimension"] = by_dim;
    r["entries"] = entries;
    manifest["dimension_or_t"] = *a.cmt;
    manifest["count"] = f.count();
    manifest["connected_count"] = f.connected_count();
  }
  Json names = Json::array();
  for (const auto& [name, doc] : files) names.push_back(name);
  manifest["files"] = names;
  if (!extra.empty()) {
    Json reps = Json::array();
    for (const auto& [name, doc] : extra) reps.push_back(name);
    manifest["representatives"] = reps;
  }
  if (!a.out.empty()) {
    fs::create_directories(a.out);
    for (const auto& [name, doc] : files) WriteFile(fs::path(a.out) / name, doc);
    for (const auto& [name, doc] : extra) WriteFile(fs::path(a.out) / name, doc);
    WriteFile(fs::path(a.out) / "manifest.json", manifest.dump(2) + "\n");
    r["out"] = a.out;
  }
  r["manifest"] = manifest;
  return {r};
}

const char* StatusName(Status s) {
  switch (s) {
    case Status::kOk:
      return "ok";
    case Status::kDisagreement:
      return "disagreement";
    case Status::kError:
      return "error";
  }
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay codimension of bipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("--json", "JSON output (default)");
  app.add_flag("--quiet", quiet, "suppress the report on stdout");

  Input input;
  int max_t = -1;
  std::size_t verify_d = 0;
  EnumerateArgs enum_args;

  auto* classify = app.add_subcommand("classify", "structural classification");
  AddInput(classify, &input);
  auto* oracle = app.add_subcommand("oracle", "homological check of Ind(G)");
  AddInput(oracle, &input);
  oracle->add_option("--max-t", max_t, "also report CM_t for t = 0..max-t");
  auto* verify = app.add_subcommand("verify", "classify vs oracle on all unmixed graphs");
  verify->add_option("--d", verify_d, "number of matched pairs")
      ->required()
      ->check(CLI::Range(std::size_t{1}, cmt::kMaxUnmixedPairs));
  auto* expand = app.add_subcommand("expand", "expand a base with an M: line");
  AddInput(expand, &input);
  auto* contract = app.add_subcommand("contract", "contract to the cross-free base");
  AddInput(contract, &input);
  auto* enumerate = app.add_subcommand("enumerate", "enumerate CM or sharp CM_t graphs");
  enumerate->add_option("--cm", enum_args.cm, "dimension of CM graphs");
  enumerate->add_option("--cmt", enum_args.cmt, "t for graphs that are CM_t, not CM_{t-1}");
  enumerate->add_option("--max-total", enum_args.max_total, "bound on sum of multiplicities");
  enumerate->add_option("--out", enum_args.out, "directory for graph files and manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string digest_input = echo;
  try {
    if (classify->parsed()) {
      digest_input = input.read();
      outcome = Classify(digest_input);
    } else if (oracle->parsed()) {
      digest_input = input.read();
      outcome = Oracle(digest_input, max_t);
    } else if (verify->parsed()) {
      outcome = Verify(verify_d);
    } else if (expand->parsed()) {
      digest_input = input.read();
      outcome = Expand(digest_input);
    } else if (contract->parsed()) {
      digest_input = input.read();
      outcome = Contract(digest_input);
    } else if (enumerate->parsed()) {
      outcome = Enumerate(enum_args);
    }
  } catch (const cmt::ParseError& e) {
    outcome = {Json{{"error", e.what()}, {"line", e.line()}}, Status::kError};
  } catch (const cmt::IsolatedVertexError& e) {
    outcome = {Json{{"error", e.what()}, {"vertex", e.vertex()}}, Status::kError};
  } catch (const std::exception& e) {
    outcome = {Json{{"error", e.what()}}, Status::kError};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["command"] = echo;
  report["input_digest"] = Sha256Hex(digest_input);
  report["result"] = outcome.result;
  report["timing_ms"] = ms;
  report["status"] = StatusName(outcome.status);
  if (!quiet) std::cout << report.dump(2) << "\n";
  if (outcome.status == Status::kError) {
    std::cerr << "cmt: " << outcome.result["error"].get<std::string>() << "\n";
  }
  switch (outcome.status) {
    case Status::kOk:
      return 0;
    case Status::kDisagreement:
      return 2;
    case Status::kError:
      return 1;
  }
  return 1;
}
