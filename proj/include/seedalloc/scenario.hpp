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

#ifndef SEEDALLOC_SCENARIO_HPP_
#define SEEDALLOC_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "seedalloc/graph.hpp"
#include "seedalloc/regret.hpp"

namespace seedalloc {

// Payment factor beta_i = unit_price * f_i with f_i ~ Uniform(lo, hi).
struct BetaPolicy {
  double unit_price = 1.0;
  double lo = 0.8;
  double hi = 1.2;
};

struct ScenarioParams {
  double lambda = 1.0;        // total demand / supply
  double omega = 0.05;        // mean individual demand / supply
  std::size_t advertisers = 20;
  double alpha_spread = 0.5;  // demand jitter factor ~ Uniform(1 - s, 1 + s)
  BetaPolicy beta;
  std::uint64_t seed = 0;
};

// Median over nodes with positive singleton influence of cost(u) / I({u}).
double median_cost_per_influence(const CostTable& costs, std::span<const double> singletons);

// Draws jittered demands, rescales them so they sum to floor(lambda * supply)
// with every demand >= 1, and sets budget = max(1, floor(beta_i * demand)).
// Throws GenerationError when floor(lambda * supply) < advertiser count.
std::vector<Advertiser> generate_advertisers(double supply, const ScenarioParams& params);

// Advertiser count paired with omega in the replication preset
// {10% -> 100, 30% -> 50, 50% -> 20, 70% -> 10, 90% -> 5}. An explicit count
// wins; a non-preset omega without one throws ArgumentError.
std::size_t pair_omega_with_count(double omega, std::optional<std::size_t> explicit_count = std::nullopt);

// "id demand budget" table, one advertiser per line, '#' comments allowed.
void write_population(std::ostream& out, std::span<const Advertiser> advertisers);
std::vector<Advertiser> read_population(std::istream& in);

}  // namespace seedalloc

#endif  // SEEDALLOC_SCENARIO_HPP_
