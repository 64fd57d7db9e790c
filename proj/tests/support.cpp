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


#include "support.hpp"

#include <unistd.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace seedalloc::testing {

double reference_influence(const Graph& graph, const std::vector<NodeId>& seeds) {
  const std::size_t n = graph.node_count();
  const std::size_t m = graph.arc_count();
  if (n > 32 || m > 20) throw std::invalid_argument("reference_influence: instance too large");
  std::vector<NodeId> from(m), to(m);
  std::vector<double> p(m);
  for (std::size_t a = 0; a < m; ++a) {
    from[a] = graph.source_of(a);
    to[a] = graph.arcs()[a].target;
    p[a] = graph.arcs()[a].probability;
  }
  std::uint32_t seed_mask = 0;
  for (NodeId s : seeds) seed_mask |= std::uint32_t{1} << s;

  double expected = 0.0;
  for (std::uint32_t world = 0; world < (std::uint32_t{1} << m); ++world) {
    double weight = 1.0;
    for (std::size_t a = 0; a < m; ++a) weight *= (world >> a & 1) ? p[a] : 1.0 - p[a];
    if (weight == 0.0) continue;
    std::uint32_t reached = seed_mask, previous = 0;
    while (reached != previous) {
      previous = reached;
      for (std::size_t a = 0; a < m; ++a)
        if ((world >> a & 1) && (reached >> from[a] & 1)) reached |= std::uint32_t{1} << to[a];
    }
    expected += weight * std::popcount(reached);
  }
  return expected;
}

double reference_regret(std::size_t seed_count, double influence, double demand, double budget,
                        double gamma, double delta) {
  const double card = delta * static_cast<double>(seed_count);
  if (influence < demand) return budget - budget * gamma * influence / demand + card;
  if (influence > demand) return budget * (influence - demand) / demand + card;
  return 0.0;
}

double reference_optimum(const TinyInstance& inst, double gamma, double delta) {
  const std::size_t n = inst.graph.node_count();
  const std::size_t ell = inst.advertisers.size();
  std::map<std::uint32_t, double> cache;
  auto influence_of = [&](std::uint32_t mask) {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::vector<NodeId> seeds;
    for (NodeId u = 0; u < n; ++u)
      if (mask >> u & 1) seeds.push_back(u);
    return cache[mask] = reference_influence(inst.graph, seeds);
  };

  std::vector<std::uint32_t> masks(ell, 0);
  std::vector<double> spent(ell, 0.0);
  double best = std::numeric_limits<double>::infinity();
  std::function<void(NodeId)> visit = [&](NodeId u) {
    if (u == n) {
      double total = 0.0;
      for (std::size_t j = 0; j < ell; ++j) {
        const auto& a = inst.advertisers[j];
        total += reference_regret(std::popcount(masks[j]), influence_of(masks[j]), a.demand,
                                  a.budget, gamma, delta);
      }
      best = std::min(best, total);
      return;
    }
    visit(u + 1);
    for (std::size_t j = 0; j < ell; ++j) {
      const double c = inst.costs[u];
      if (spent[j] + c > inst.advertisers[j].budget + 1e-9) continue;
      masks[j] |= std::uint32_t{1} << u;
      spent[j] += c;
      visit(u + 1);
      spent[j] -= c;
      masks[j] &= ~(std::uint32_t{1} << u);
    }
  };
  visit(0);
  return best;
}

std::vector<std::string> allocation_violations(const AllocationProblem& problem,
                                               const AllocatorConfig& config,
                                               const Allocation& allocation) {
  std::vector<std::string> out;
  const auto ads = problem.advertisers();
  const std::size_t n = problem.node_count();
  if (allocation.entries.size() != ads.size()) {
    out.push_back("entry count differs from advertiser count");
    return out;
  }
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < ads.size(); ++i) {
    const auto& e = allocation.entries[i];
    const auto& a = ads[i];
    const std::string who = fmt::format("{} a{}", allocation.algorithm, i);
    if (e.advertiser != i) out.push_back(who + ": entry out of order");
    if (e.status == AdvertiserStatus::eliminated && !e.seeds.empty())
      out.push_back(who + ": eliminated but holds seeds");

    double spent = 0.0;
    for (NodeId u : e.seeds) {
      if (u >= n) {
        out.push_back(who + ": seed out of range");
        continue;
      }
      if (owner[u] != -1) out.push_back(fmt::format("{}: node {} also held by a{}", who, u, owner[u]));
      owner[u] = static_cast<int>(i);
      spent += problem.costs()[u];
    }
    if (std::abs(spent - e.spent) > 1e-9 * std::max(1.0, spent)) out.push_back(who + ": spent mismatch");

    const double influence = e.seeds.empty() ? 0.0 : problem.estimator().estimate(problem.graph(), e.seeds);
    if (std::abs(influence - e.influence) > 1e-9 * std::max(1.0, influence))
      out.push_back(fmt::format("{}: recorded influence {} but seeds give {}", who, e.influence, influence));
    const double r = reference_regret(e.seeds.size(), e.influence, a.demand, a.budget,
                                      config.regret.gamma, config.regret.delta);
    if (std::abs(r - e.regret.total()) > 1e-9 * std::max(1.0, r)) out.push_back(who + ": regret mismatch");

    // Each pick happened while the advertiser was unsatisfied with budget left.
    std::vector<NodeId> prefix;
    double prefix_cost = 0.0;
    for (NodeId u : e.seeds) {
      const double before = prefix.empty() ? 0.0 : problem.estimator().estimate(problem.graph(), prefix);
      if (before >= a.demand) out.push_back(who + ": picked a seed after demand was met");
      if (a.budget - prefix_cost <= 0.0) out.push_back(who + ": picked a seed with no budget left");
      if (config.budget_mode == BudgetMode::strict && !fits_budget(problem.costs()[u], a.budget - prefix_cost))
        out.push_back(who + ": strict mode picked an unaffordable seed");
      prefix.push_back(u);
      prefix_cost += problem.costs()[u];
    }
    if (config.budget_mode == BudgetMode::strict && !fits_budget(spent, a.budget))
      out.push_back(who + ": strict mode overspent");
  }

  // Pool-monotone allocators never leave a usable node behind.
  const bool greedy = allocation.algorithm == "bg";
  if (greedy || allocation.algorithm == "random" || allocation.algorithm == "topk") {
    for (std::size_t i = 0; i < ads.size(); ++i) {
      const auto& e = allocation.entries[i];
      const double remaining = ads[i].budget - e.spent;
      if (e.influence >= ads[i].demand || remaining <= 0.0) continue;
      for (NodeId u = 0; u < n; ++u) {
        if (owner[u] != -1) continue;
        if (greedy && problem.singletons().influence[u] <= 0.0) continue;
        if (config.budget_mode == BudgetMode::strict && !fits_budget(problem.costs()[u], remaining)) continue;
        out.push_back(fmt::format("{} a{}: stopped while node {} was usable", allocation.algorithm, i, u));
        break;
      }
    }
  }
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / fmt::format("seedalloc_{}_{}", ::getpid(), name)).string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace seedalloc::testing
