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

#ifndef SEEDALLOC_ALLOCATION_HPP_
#define SEEDALLOC_ALLOCATION_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seedalloc/graph.hpp"
#include "seedalloc/regret.hpp"

namespace seedalloc {

enum class AdvertiserStatus { served, eliminated };

// How eliminated advertisers enter the reported total regret.
enum class EliminationAccounting {
  exclude,             // the provider declined them; they contribute 0
  charge_full_budget,  // treated as an empty seed set, regret = budget
};

struct AdvertiserAllocation {
  std::size_t advertiser = 0;  // index into the advertiser list
  std::vector<NodeId> seeds;   // in selection order
  double spent = 0.0;
  double influence = 0.0;
  RegretBreakdown regret;
  AdvertiserStatus status = AdvertiserStatus::served;
};

struct Allocation {
  std::string algorithm;
  std::vector<AdvertiserAllocation> entries;  // same order as the advertisers
  double seconds = 0.0;
  std::size_t outer_iterations = 1;

  std::size_t eliminated_count() const;
};

// Per-category sums of reported regret. total == excessive + unsatisfied.
struct RegretSummary {
  double total = 0.0;
  double excessive = 0.0;
  double unsatisfied = 0.0;
  std::size_t eliminated = 0;
};

// Sum of the per-advertiser regrets; eliminated advertisers enter per
// `accounting`.
double total_regret(const Allocation& allocation, std::span<const Advertiser> advertisers,
                    const RegretParams& params,
                    EliminationAccounting accounting = EliminationAccounting::exclude);

RegretSummary summarize(const Allocation& allocation, std::span<const Advertiser> advertisers,
                        const RegretParams& params,
                        EliminationAccounting accounting = EliminationAccounting::exclude);

}  // namespace seedalloc

#endif  // SEEDALLOC_ALLOCATION_HPP_
