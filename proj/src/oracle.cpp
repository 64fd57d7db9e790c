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

#include "seedalloc/oracle.hpp"

#include <bit>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "seedalloc/allocators.hpp"
#include "seedalloc/errors.hpp"

namespace seedalloc {

namespace {

std::vector<NodeId> members(std::uint32_t mask) {
  std::vector<NodeId> out;
  for (NodeId u = 0; mask != 0; ++u, mask >>= 1)
    if (mask & 1) out.push_back(u);
  return out;
}

}  // namespace

OracleResult brute_force_optimal(const Graph& graph, const CostTable& costs,
                                 std::span<const Advertiser> advertisers,
                                 const RegretParams& params, const OracleLimits& limits) {
  const std::size_t n = graph.node_count();
  const std::size_t ell = advertisers.size();
  if (n > limits.max_nodes || ell > limits.max_advertisers || graph.arc_count() > limits.max_arcs)
    throw RefusalError(fmt::format(
        "oracle refuses n={} advertisers={} arcs={} (limits {}/{}/{})", n, ell,
        graph.arc_count(), limits.max_nodes, limits.max_advertisers, limits.max_arcs));
  if (costs.size() < n) throw ArgumentError("cost table does not cover every node");
  validate(params);
  for (const auto& a : advertisers) validate(a);

  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<double> influence(subsets), cost(subsets, 0.0);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const auto seeds = members(mask);
    influence[mask] = exact_influence(graph, seeds, limits.max_arcs);
    for (NodeId u : seeds) cost[mask] += costs[u];
  }

  OracleResult best;
  best.regret = std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> best_masks;
  std::vector<std::size_t> digit(n, 0);  // 0 = unassigned, j + 1 = advertiser j
  std::vector<std::uint32_t> masks(ell);
  while (true) {
    std::fill(masks.begin(), masks.end(), 0);
    for (std::size_t u = 0; u < n; ++u)
      if (digit[u] != 0) masks[digit[u] - 1] |= std::uint32_t{1} << u;

    bool feasible = true;
    for (std::size_t j = 0; j < ell && feasible; ++j)
      feasible = masks[j] == 0 || fits_budget(cost[masks[j]], advertisers[j].budget);
    if (feasible) {
      ++best.feasible_examined;
      double total = 0.0;
      for (std::size_t j = 0; j < ell; ++j)
        total += regret(static_cast<std::size_t>(std::popcount(masks[j])), influence[masks[j]],
                        advertisers[j], params).total();
      if (total < best.regret) {
        best.regret = total;
        best_masks = masks;
      }
    }

    // Odometer increment with node n-1 least significant.
    bool exhausted = true;
    for (std::size_t pos = n; pos-- > 0;) {
      if (++digit[pos] <= ell) {
        exhausted = false;
        break;
      }
      digit[pos] = 0;
    }
    if (exhausted) break;
  }

  best.allocation.algorithm = "oracle";
  for (std::size_t j = 0; j < ell; ++j) {
    AdvertiserAllocation e;
    e.advertiser = j;
    const std::uint32_t mask = best_masks.empty() ? 0 : best_masks[j];
    e.seeds = members(mask);
    e.spent = cost[mask];
    e.influence = influence[mask];
    e.regret = regret(e.seeds.size(), e.influence, advertisers[j], params);
    best.allocation.entries.push_back(std::move(e));
  }
  return best;
}

}  // namespace seedalloc
