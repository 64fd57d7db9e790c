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

#ifndef SEEDALLOC_ALLOCATORS_HPP_
#define SEEDALLOC_ALLOCATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedalloc/allocation.hpp"
#include "seedalloc/graph.hpp"
#include "seedalloc/influence.hpp"
#include "seedalloc/regret.hpp"

namespace seedalloc {

enum class BudgetMode {
  // Keep selecting while the remaining budget is positive; the last pick may
  // overdraw it.
  overdraft,
  // Only nodes whose cost fits the remaining budget are eligible.
  strict,
};

enum class ToleranceComparator { greater, greater_equal };

enum class ThresholdMode {
  mean,      // tau = mean of all phase-one regrets
  positive,  // tau = 0, so every advertiser with regret > 0 is revisited
};

struct AllocatorConfig {
  RegretParams regret;
  BudgetMode budget_mode = BudgetMode::overdraft;
  std::size_t tolerance = 1;  // AEA regret tolerance k
  ToleranceComparator comparator = ToleranceComparator::greater;
  ThresholdMode threshold = ThresholdMode::mean;
  EliminationAccounting accounting = EliminationAccounting::exclude;
};

// Everything an allocator reads. The referenced objects must outlive the
// problem. `singletons` is computed on construction when not supplied.
class AllocationProblem {
 public:
  AllocationProblem(const Graph& graph, const CostTable& costs,
                    std::span<const Advertiser> advertisers, const InfluenceEstimator& estimator,
                    std::optional<SingletonTable> singletons = std::nullopt);

  const Graph& graph() const { return *graph_; }
  const CostTable& costs() const { return *costs_; }
  std::span<const Advertiser> advertisers() const { return advertisers_; }
  const InfluenceEstimator& estimator() const { return *estimator_; }
  const SingletonTable& singletons() const { return singletons_; }
  std::size_t node_count() const { return singletons_.influence.size(); }

  // Advertiser indices by descending budget/demand, ties by lower id.
  std::vector<std::size_t> priority_order() const;

 private:
  const Graph* graph_;
  const CostTable* costs_;
  std::span<const Advertiser> advertisers_;
  const InfluenceEstimator* estimator_;
  SingletonTable singletons_;
};

// Budget effective greedy: advertisers in priority order, each repeatedly
// taking the pool node maximizing (regret decrease) / I({u}) while
// unsatisfied, with budget left, and nodes remaining.
Allocation bg_allocate(const AllocationProblem& problem, const AllocatorConfig& config);

// Advertiser elimination: reruns the greedy pass from scratch, dropping the
// unsatisfied advertiser with the lowest budget/demand while the number of
// unsatisfied advertisers exceeds the tolerance.
Allocation aea_allocate(const AllocationProblem& problem, const AllocatorConfig& config);

// Advertiser driven local search: greedy pass, then reallocation for the
// advertisers whose regret exceeds the threshold.
Allocation adls_allocate(const AllocationProblem& problem, const AllocatorConfig& config);

Allocation random_allocate(const AllocationProblem& problem, const AllocatorConfig& config,
                           std::uint64_t seed);

Allocation topk_allocate(const AllocationProblem& problem, const AllocatorConfig& config);

enum class Algorithm { bg, aea, adls, random, topk };

std::string_view to_string(Algorithm algorithm);
// Throws ArgumentError for unknown names.
Algorithm parse_algorithm(std::string_view name);

// Dispatches and records wall-clock seconds around the allocator call.
Allocation allocate(Algorithm algorithm, const AllocationProblem& problem,
                    const AllocatorConfig& config, std::uint64_t seed = 0);

// Cost test shared by strict mode and the oracle.
bool fits_budget(double cost, double remaining);

}  // namespace seedalloc

#endif  // SEEDALLOC_ALLOCATORS_HPP_
