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

#include "seedalloc/allocators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "seedalloc/errors.hpp"
#include "seedalloc/rng.hpp"

namespace seedalloc {

namespace {

// Nodes not yet handed to any advertiser.
class NodePool {
 public:
  explicit NodePool(std::size_t n) : available_(n, 1), size_(n) {}

  bool contains(NodeId u) const { return available_[u] != 0; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  void take(NodeId u) {
    if (available_[u]) {
      available_[u] = 0;
      --size_;
    }
  }
  void give_back(NodeId u) {
    if (!available_[u]) {
      available_[u] = 1;
      ++size_;
    }
  }
  std::size_t capacity() const { return available_.size(); }

 private:
  std::vector<char> available_;
  std::size_t size_;
};

AdvertiserAllocation empty_entry(std::size_t index, const Advertiser& a, const RegretParams& p) {
  AdvertiserAllocation e;
  e.advertiser = index;
  e.regret = regret(0, 0.0, a, p);
  return e;
}

bool eligible(const AllocationProblem& problem, const AllocatorConfig& config, NodeId u,
              double remaining) {
  return config.budget_mode == BudgetMode::overdraft ||
         fits_budget(problem.costs()[u], remaining);
}

// The three stop gates every allocator shares.
bool keep_selecting(const AdvertiserAllocation& e, const Advertiser& a, double remaining,
                    const NodePool& pool) {
  return e.influence < a.demand && remaining > 0.0 && !pool.empty();
}

void add_seed(const AllocationProblem& problem, AdvertiserAllocation& e, NodePool& pool, NodeId u,
              double& remaining) {
  e.seeds.push_back(u);
  pool.take(u);
  remaining -= problem.costs()[u];
  e.spent += problem.costs()[u];
}

// Greedy pick loop for one advertiser, starting from an empty seed set and
// the full budget.
void greedy_fill(const AllocationProblem& problem, const AllocatorConfig& config,
                 std::size_t index, NodePool& pool, AdvertiserAllocation& e) {
  const Advertiser& a = problem.advertisers()[index];
  const auto& single = problem.singletons().influence;
  e = empty_entry(index, a, config.regret);
  double remaining = a.budget;
  std::vector<NodeId> candidates;
  while (keep_selecting(e, a, remaining, pool)) {
    candidates.clear();
    for (NodeId u = 0; u < pool.capacity(); ++u)
      if (pool.contains(u) && single[u] > 0.0 && eligible(problem, config, u, remaining))
        candidates.push_back(u);
    if (candidates.empty()) break;

    std::vector<double> extended;
    if (e.seeds.empty()) {
      extended.reserve(candidates.size());
      for (NodeId c : candidates) extended.push_back(single[c]);
    } else {
      extended = problem.estimator().estimate_extensions(problem.graph(), e.seeds, candidates);
    }
    const double now = regret(e.seeds.size(), e.influence, a, config.regret).total();
    std::size_t best = candidates.size();
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double after = regret(e.seeds.size() + 1, extended[i], a, config.regret).total();
      const double ratio = (now - after) / single[candidates[i]];
      if (best == candidates.size() || ratio > best_ratio) {
        best = i;
        best_ratio = ratio;
      }
    }
    add_seed(problem, e, pool, candidates[best], remaining);
    e.influence = extended[best];
  }
  e.regret = regret(e.seeds.size(), e.influence, a, config.regret);
}

Allocation greedy_pass(const AllocationProblem& problem, const AllocatorConfig& config,
                       const std::vector<std::size_t>& order, const std::vector<char>& active,
                       NodePool& pool) {
  Allocation out;
  const auto ads = problem.advertisers();
  out.entries.reserve(ads.size());
  for (std::size_t i = 0; i < ads.size(); ++i) out.entries.push_back(empty_entry(i, ads[i], config.regret));
  for (std::size_t i : order) {
    if (!active[i]) {
      out.entries[i].status = AdvertiserStatus::eliminated;
      continue;
    }
    greedy_fill(problem, config, i, pool, out.entries[i]);
  }
  return out;
}

void check_problem(const AllocationProblem& problem, const AllocatorConfig& config) {
  validate(config.regret);
  for (const auto& a : problem.advertisers()) validate(a);
  if (problem.costs().size() < problem.node_count())
    throw ArgumentError("cost table does not cover every node");
}

}  // namespace

bool fits_budget(double cost, double remaining) {
  return cost <= remaining + 1e-9 * std::max(1.0, std::abs(remaining));
}

AllocationProblem::AllocationProblem(const Graph& graph, const CostTable& costs,
                                     std::span<const Advertiser> advertisers,
                                     const InfluenceEstimator& estimator,
                                     std::optional<SingletonTable> singletons)
    : graph_(&graph),
      costs_(&costs),
      advertisers_(advertisers),
      estimator_(&estimator),
      singletons_(singletons ? std::move(*singletons) : singleton_supply(estimator, graph)) {}

std::vector<std::size_t> AllocationProblem::priority_order() const {
  std::vector<std::size_t> order(advertisers_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](std::size_t x, std::size_t y) {
    const double ex = advertisers_[x].effectiveness(), ey = advertisers_[y].effectiveness();
    if (ex != ey) return ex > ey;
    return advertisers_[x].id < advertisers_[y].id;
  });
  return order;
}

Allocation bg_allocate(const AllocationProblem& problem, const AllocatorConfig& config) {
  check_problem(problem, config);
  NodePool pool(problem.node_count());
  std::vector<char> active(problem.advertisers().size(), 1);
  Allocation out = greedy_pass(problem, config, problem.priority_order(), active, pool);
  out.algorithm = "bg";
  return out;
}

Allocation aea_allocate(const AllocationProblem& problem, const AllocatorConfig& config) {
  check_problem(problem, config);
  const auto ads = problem.advertisers();
  const auto order = problem.priority_order();
  std::vector<char> active(ads.size(), 1);
  std::size_t remaining_active = ads.size();
  std::size_t iterations = 0;
  Allocation out;
  while (true) {
    ++iterations;
    NodePool pool(problem.node_count());
    out = greedy_pass(problem, config, order, active, pool);

    std::vector<std::size_t> unsatisfied;
    for (std::size_t i : order)
      if (active[i] && out.entries[i].influence < ads[i].demand) unsatisfied.push_back(i);
    const bool over = config.comparator == ToleranceComparator::greater
                          ? unsatisfied.size() > config.tolerance
                          : unsatisfied.size() >= config.tolerance;
    if (!over || unsatisfied.empty()) break;

    const std::size_t victim = *std::min_element(
        unsatisfied.begin(), unsatisfied.end(), [&](std::size_t x, std::size_t y) {
          const double ex = ads[x].effectiveness(), ey = ads[y].effectiveness();
          if (ex != ey) return ex < ey;
          return ads[x].id < ads[y].id;
        });
    active[victim] = 0;
    if (--remaining_active == 0) {
      for (auto& e : out.entries) {
        e = empty_entry(e.advertiser, ads[e.advertiser], config.regret);
        e.status = AdvertiserStatus::eliminated;
      }
      break;
    }
  }
  out.algorithm = "aea";
  out.outer_iterations = iterations;
  return out;
}

Allocation adls_allocate(const AllocationProblem& problem, const AllocatorConfig& config) {
  check_problem(problem, config);
  const auto ads = problem.advertisers();
  const auto order = problem.priority_order();
  std::vector<char> active(ads.size(), 1);
  NodePool pool(problem.node_count());
  const Allocation phase_one = greedy_pass(problem, config, order, active, pool);

  double tau = 0.0;
  if (config.threshold == ThresholdMode::mean && !ads.empty()) {
    for (const auto& e : phase_one.entries) tau += e.regret.total();
    tau /= static_cast<double>(ads.size());
  }
  std::vector<std::size_t> high;
  for (std::size_t i : order)
    if (phase_one.entries[i].regret.total() > tau) high.push_back(i);

  Allocation out = phase_one;
  out.algorithm = "adls";
  if (high.empty()) return out;

  // Released seeds join the free pool before any reallocation.
  for (std::size_t i : high)
    for (NodeId u : phase_one.entries[i].seeds) pool.give_back(u);

  for (std::size_t i : high) {
    const AdvertiserAllocation& before = phase_one.entries[i];
    AdvertiserAllocation& e = out.entries[i];
    greedy_fill(problem, config, i, pool, e);
    if (e.regret.total() <= before.regret.total()) continue;
    // Accept only if not worse; restoring needs the old seeds still free.
    for (NodeId u : e.seeds) pool.give_back(u);
    const bool restorable = std::all_of(before.seeds.begin(), before.seeds.end(),
                                        [&](NodeId u) { return pool.contains(u); });
    if (restorable) {
      for (NodeId u : before.seeds) pool.take(u);
      e = before;
    } else {
      for (NodeId u : e.seeds) pool.take(u);
    }
  }

  const RegretParams& p = config.regret;
  if (total_regret(out, ads, p, config.accounting) > total_regret(phase_one, ads, p, config.accounting)) {
    out = phase_one;
    out.algorithm = "adls";
  }
  return out;
}

Allocation random_allocate(const AllocationProblem& problem, const AllocatorConfig& config,
                           std::uint64_t seed) {
  check_problem(problem, config);
  const auto ads = problem.advertisers();
  Rng rng(seed);
  NodePool pool(problem.node_count());
  Allocation out;
  out.algorithm = "random";
  for (std::size_t i = 0; i < ads.size(); ++i) out.entries.push_back(empty_entry(i, ads[i], config.regret));
  std::vector<NodeId> eligible_nodes;
  for (std::size_t i : problem.priority_order()) {
    auto& e = out.entries[i];
    double remaining = ads[i].budget;
    while (keep_selecting(e, ads[i], remaining, pool)) {
      eligible_nodes.clear();
      for (NodeId u = 0; u < pool.capacity(); ++u)
        if (pool.contains(u) && eligible(problem, config, u, remaining)) eligible_nodes.push_back(u);
      if (eligible_nodes.empty()) break;
      add_seed(problem, e, pool, eligible_nodes[rng.index(eligible_nodes.size())], remaining);
      e.influence = problem.estimator().estimate(problem.graph(), e.seeds);
    }
    e.regret = regret(e.seeds.size(), e.influence, ads[i], config.regret);
  }
  return out;
}

Allocation topk_allocate(const AllocationProblem& problem, const AllocatorConfig& config) {
  check_problem(problem, config);
  const auto ads = problem.advertisers();
  const auto& single = problem.singletons().influence;
  std::vector<NodeId> ranking(problem.node_count());
  std::iota(ranking.begin(), ranking.end(), 0);
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](NodeId x, NodeId y) { return single[x] > single[y]; });

  NodePool pool(problem.node_count());
  Allocation out;
  out.algorithm = "topk";
  for (std::size_t i = 0; i < ads.size(); ++i) out.entries.push_back(empty_entry(i, ads[i], config.regret));
  for (std::size_t i : problem.priority_order()) {
    auto& e = out.entries[i];
    double remaining = ads[i].budget;
    while (keep_selecting(e, ads[i], remaining, pool)) {
      auto it = std::find_if(ranking.begin(), ranking.end(), [&](NodeId u) {
        return pool.contains(u) && eligible(problem, config, u, remaining);
      });
      if (it == ranking.end()) break;
      add_seed(problem, e, pool, *it, remaining);
      e.influence = problem.estimator().estimate(problem.graph(), e.seeds);
    }
    e.regret = regret(e.seeds.size(), e.influence, ads[i], config.regret);
  }
  return out;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::bg: return "bg";
    case Algorithm::aea: return "aea";
    case Algorithm::adls: return "adls";
    case Algorithm::random: return "random";
    case Algorithm::topk: return "topk";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::bg, Algorithm::aea, Algorithm::adls, Algorithm::random, Algorithm::topk})
    if (name == to_string(a)) return a;
  throw ArgumentError(fmt::format("unknown algorithm '{}'", name));
}

Allocation allocate(Algorithm algorithm, const AllocationProblem& problem,
                    const AllocatorConfig& config, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Allocation out;
  switch (algorithm) {
    case Algorithm::bg: out = bg_allocate(problem, config); break;
    case Algorithm::aea: out = aea_allocate(problem, config); break;
    case Algorithm::adls: out = adls_allocate(problem, config); break;
    case Algorithm::random: out = random_allocate(problem, config, seed); break;
    case Algorithm::topk: out = topk_allocate(problem, config); break;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace seedalloc
