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

#include "seedalloc/regret.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "seedalloc/allocation.hpp"
#include "seedalloc/errors.hpp"

namespace seedalloc {

void validate(const Advertiser& a) {
  if (!(a.demand > 0.0))
    throw ArgumentError(fmt::format("advertiser {} demand must be positive", a.id));
  if (!(a.budget >= 0.0))
    throw ArgumentError(fmt::format("advertiser {} budget must be non-negative", a.id));
}

void validate(const RegretParams& p) {
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) throw ArgumentError("gamma must lie in [0, 1]");
  if (!(p.delta >= 0.0)) throw ArgumentError("delta must be non-negative");
}

std::string_view to_string(RegretCategory category) {
  switch (category) {
    case RegretCategory::zero: return "zero";
    case RegretCategory::excessive: return "excessive";
    case RegretCategory::unsatisfied: return "unsatisfied";
  }
  return "?";
}

RegretBreakdown regret(std::size_t seed_count, double influence, const Advertiser& a,
                       const RegretParams& params) {
  RegretBreakdown r;
  const double cardinality = params.delta * static_cast<double>(seed_count);
  if (influence < a.demand) {
    r.category = RegretCategory::unsatisfied;
    r.monetary = a.budget * (1.0 - params.gamma * influence / a.demand);
    r.cardinality = cardinality;
  } else if (influence > a.demand) {
    r.category = RegretCategory::excessive;
    r.monetary = a.budget * (influence - a.demand) / a.demand;
    r.cardinality = cardinality;
  }
  return r;
}

double marginal_decrease(const Graph& graph, const InfluenceEstimator& estimator,
                         std::span<const NodeId> seeds, NodeId candidate, const Advertiser& a,
                         const RegretParams& params) {
  if (std::find(seeds.begin(), seeds.end(), candidate) != seeds.end())
    throw ArgumentError(fmt::format("node {} is already a seed", candidate));
  std::vector<NodeId> extended(seeds.begin(), seeds.end());
  extended.push_back(candidate);
  const double before = regret(seeds.size(), estimator.estimate(graph, seeds), a, params).total();
  const double after = regret(extended.size(), estimator.estimate(graph, extended), a, params).total();
  return before - after;
}

std::size_t Allocation::eliminated_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
    return e.status == AdvertiserStatus::eliminated;
  }));
}

RegretSummary summarize(const Allocation& allocation, std::span<const Advertiser> advertisers,
                        const RegretParams& params, EliminationAccounting accounting) {
  RegretSummary s;
  for (const auto& e : allocation.entries) {
    if (e.status == AdvertiserStatus::eliminated) {
      ++s.eliminated;
      if (accounting == EliminationAccounting::exclude) continue;
    }
    const auto r = regret(e.seeds.size(), e.influence, advertisers[e.advertiser], params);
    if (r.category == RegretCategory::excessive) s.excessive += r.total();
    if (r.category == RegretCategory::unsatisfied) s.unsatisfied += r.total();
  }
  s.total = s.excessive + s.unsatisfied;
  return s;
}

double total_regret(const Allocation& allocation, std::span<const Advertiser> advertisers,
                    const RegretParams& params, EliminationAccounting accounting) {
  return summarize(allocation, advertisers, params, accounting).total;
}

}  // namespace seedalloc
