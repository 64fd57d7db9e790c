// Copyright 2026 The seedalloc Authors.
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

// seedalloc command line. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "seedalloc/seedalloc.h"

namespace {

constexpr int kCheckFailed = 1;
constexpr int kError = 2;

int report_error(sa_status status) {
  std::fprintf(stderr, "seedalloc: %s: %s\n", sa_status_name(status), sa_last_error());
  return kError;
}

int cmd_run(const std::string& config_path, const std::string& out_path) {
  sa_config* config = nullptr;
  sa_status status = sa_config_load(config_path.c_str(), &config);
  if (status != SA_OK) return report_error(status);
  size_t rows = 0, errors = 0;
  status = sa_run(config, out_path.c_str(), &rows, &errors);
  sa_config_free(config);
  if (status != SA_OK) return report_error(status);
  std::fprintf(stderr, "wrote %zu rows (%zu error rows) to %s\n", rows, errors, out_path.c_str());
  return 0;
}

int cmd_check(sa_status status, int passed, char* report) {
  if (status != SA_OK) return report_error(status);
  std::fputs(report, stdout);
  sa_string_free(report);
  return passed ? 0 : kCheckFailed;
}

int cmd_stats(const std::string& path, bool undirected) {
  sa_graph* graph = nullptr;
  sa_status status = sa_graph_load(path.c_str(), undirected ? 0 : 1, &graph);
  if (status != SA_OK) return report_error(status);
  sa_graph_stats s{};
  status = sa_graph_stats_get(graph, &s);
  sa_graph_free(graph);
  if (status != SA_OK) return report_error(status);
  std::printf("%-12s %-12s %-12s %-12s\n", "nodes", "edges", "avg_degree", "max_degree");
  std::printf("%-12zu %-12zu %-12.2f %-12zu\n", s.nodes, s.edges, s.average_degree, s.max_degree);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret-minimizing seed allocation for multiple advertisers"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  auto* run = app.add_subcommand("run", "Run an experiment sweep and write a CSV");
  run->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Output CSV path")->required();

  std::uint64_t seed = 1;
  std::size_t instances = 10, nodes = 6, advertisers = 2;
  auto* oracle = app.add_subcommand("oracle-check", "Compare heuristics with the brute-force optimum");
  oracle->add_option("--seed", seed, "Instance seed");
  oracle->add_option("--instances", instances, "Number of random instances");
  oracle->add_option("--nodes", nodes, "Nodes per instance");
  oracle->add_option("--advertisers", advertisers, "Advertisers per instance");

  auto* example = app.add_subcommand("replicate-example", "Run the 12-node worked example");

  std::string graph_path;
  bool undirected = false;
  auto* stats = app.add_subcommand("stats", "Print node/edge/degree statistics of an edge list");
  stats->add_option("--graph", graph_path, "Edge list file")->required();
  stats->add_flag("--undirected", undirected, "Treat edges as undirected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  if (run->parsed()) return cmd_run(config_path, out_path);
  if (oracle->parsed()) {
    int passed = 0;
    char* report = nullptr;
    const sa_status status = sa_oracle_check(seed, instances, nodes, advertisers, &passed, &report);
    return cmd_check(status, passed, report);
  }
  if (example->parsed()) {
    int passed = 0;
    char* report = nullptr;
    const sa_status status = sa_replicate_example(&passed, &report);
    return cmd_check(status, passed, report);
  }
  if (stats->parsed()) return cmd_stats(graph_path, undirected);
  return kError;
}
