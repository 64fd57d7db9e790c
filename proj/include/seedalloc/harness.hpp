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

#ifndef SEEDALLOC_HARNESS_HPP_
#define SEEDALLOC_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seedalloc/allocation.hpp"
#include "seedalloc/allocators.hpp"
#include "seedalloc/graph.hpp"
#include "seedalloc/regret.hpp"
#include "seedalloc/scenario.hpp"

namespace seedalloc {

struct OmegaPoint {
  double omega = 0.05;
  std::optional<std::size_t> advertisers;  // preset pairing when absent
};

struct ProbabilitySetting {
  enum class Model { uniform, trivalency } model = Model::uniform;
  double p = 0.1;
  std::string label() const;
};

// Experiment description. Defaults follow the key-parameter table: lambda
// 100%, omega 5% (20 advertisers), gamma 0.5, delta 0.01.
struct ExperimentConfig {
  std::string dataset = "graph";
  std::string graph_path;
  bool directed = true;
  std::size_t max_nodes = 0;  // 0 keeps the whole graph
  ProbabilitySetting probability;
  double cost_scale = 1000.0;

  std::vector<double> lambdas{1.0};
  std::vector<OmegaPoint> omegas{OmegaPoint{0.05, 20}};
  std::vector<double> gammas{0.5};
  std::vector<double> deltas{0.01};
  std::vector<std::size_t> tolerances{1};
  std::vector<std::string> algorithms{"bg", "aea", "adls", "random", "topk"};

  std::uint32_t samples = kDefaultSamples;
  unsigned threads = 1;
  std::size_t repetitions = 5;
  std::uint64_t seed = 2024;

  double alpha_spread = 0.5;
  double beta_lo = 0.8;
  double beta_hi = 1.2;
  std::optional<double> beta_unit_price;  // median cost per influence when absent

  BudgetMode budget_mode = BudgetMode::overdraft;
  ToleranceComparator comparator = ToleranceComparator::greater;
  ThresholdMode threshold = ThresholdMode::mean;
  EliminationAccounting accounting = EliminationAccounting::exclude;

  // Wall-clock column; false writes 0 so that reruns are byte-identical.
  bool record_runtime = true;
  std::string output_path;

  std::size_t run_count() const;
};

// Throws ArgumentError on schema violations (unknown keys included).
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& config);

struct ResultRow {
  std::string dataset;
  std::string probability;
  double lambda = 0.0;
  double omega = 0.0;
  std::size_t advertisers = 0;
  double gamma = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
  std::string algorithm;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  double total_regret = 0.0;
  double excessive_regret = 0.0;
  double unsatisfied_regret = 0.0;
  std::size_t eliminated = 0;
  double runtime_seconds = 0.0;
  std::string error;  // non-empty marks an error row
};

std::string csv_header();
std::string csv_line(const ResultRow& row);

// Runs the full Cartesian sweep lambda x omega x gamma x delta x k x
// algorithm x repetition, in that nesting order. Failures become error rows.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct CheckReport {
  bool ok = false;
  std::string text;
};

// Runs every heuristic in strict mode against the brute-force optimum on
// `instances` random tiny instances. ok is false if any heuristic beats the
// oracle. Throws RefusalError when the instance exceeds the oracle limits.
CheckReport oracle_check(std::uint64_t seed, std::size_t instances = 10, std::size_t nodes = 6,
                         std::size_t advertisers = 2);

// The 12-node, 6-advertiser illustrative instance with additive influence.
struct ExampleInstance {
  Graph graph;
  CostTable costs;
  std::vector<Advertiser> advertisers;
  std::vector<double> values;
};

ExampleInstance worked_example();

// Runs BG, AEA (k = 1) and ADLS on the worked example and checks the expected
// satisfaction pattern.
CheckReport replicate_example();

}  // namespace seedalloc

#endif  // SEEDALLOC_HARNESS_HPP_
