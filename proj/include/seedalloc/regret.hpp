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

#ifndef SEEDALLOC_REGRET_HPP_
#define SEEDALLOC_REGRET_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "seedalloc/graph.hpp"
#include "seedalloc/influence.hpp"

namespace seedalloc {

struct Advertiser {
  std::size_t id = 0;
  double demand = 0.0;  // influence units
  double budget = 0.0;  // money

  // Budget per unit of demand; the allocators' priority key.
  double effectiveness() const { return budget / demand; }
};

// Throws ArgumentError unless demand > 0 and budget >= 0.
void validate(const Advertiser& advertiser);

struct RegretParams {
  double gamma = 0.5;   // penalty ratio on unsatisfied demand, in [0, 1]
  double delta = 0.01;  // per-seed cardinality charge, >= 0
};

void validate(const RegretParams& params);

enum class RegretCategory { zero, excessive, unsatisfied };

std::string_view to_string(RegretCategory category);

struct RegretBreakdown {
  RegretCategory category = RegretCategory::zero;
  double monetary = 0.0;
  double cardinality = 0.0;

  double total() const { return monetary + cardinality; }
};

// Three-branch regret of handing `seed_count` seeds with spread `influence`
// to `advertiser`:
//   influence < demand: B * (1 - gamma * I / demand) + delta * |S|
//   influence > demand: B * (I - demand) / demand   + delta * |S|
//   otherwise:          0 (no cardinality charge either)
// The branch is chosen by exact comparison.
RegretBreakdown regret(std::size_t seed_count, double influence, const Advertiser& advertiser,
                       const RegretParams& params);

// regret(S) - regret(S u {u}); negative when adding u makes things worse.
// Throws ArgumentError when u is already in S.
double marginal_decrease(const Graph& graph, const InfluenceEstimator& estimator,
                         std::span<const NodeId> seeds, NodeId candidate,
                         const Advertiser& advertiser, const RegretParams& params);

}  // namespace seedalloc

#endif  // SEEDALLOC_REGRET_HPP_
