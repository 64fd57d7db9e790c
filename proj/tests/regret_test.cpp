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


#include <algorithm>

#include <gtest/gtest.h>

#include "seedalloc/allocation.hpp"
#include "seedalloc/errors.hpp"
#include "seedalloc/harness.hpp"
#include "seedalloc/regret.hpp"
#include "seedalloc/rng.hpp"
#include "support.hpp"

namespace seedalloc {
namespace {

using testing::reference_regret;

const RegretParams kDefault{0.5, 0.01};

TEST(RegretTest, ExcessiveBranch) {
  const auto r = regret(2, 7, {2, 6, 10}, kDefault);
  EXPECT_EQ(r.category, RegretCategory::excessive);
  EXPECT_NEAR(r.total(), 1.686667, 1e-6);
  EXPECT_NEAR(r.total(), reference_regret(2, 7, 6, 10, 0.5, 0.01), 1e-12);
}

TEST(RegretTest, UnsatisfiedBranch) {
  const auto r = regret(3, 7, {4, 9, 11}, kDefault);
  EXPECT_EQ(r.category, RegretCategory::unsatisfied);
  EXPECT_NEAR(r.total(), 6.752222, 1e-6);
  EXPECT_NEAR(r.total(), reference_regret(3, 7, 9, 11, 0.5, 0.01), 1e-12);
}

TEST(RegretTest, ExactSatisfactionIsFree) {
  for (std::size_t seeds : {0u, 1u, 7u}) {
    const auto r = regret(seeds, 6, {0, 6, 123}, {0.3, 5.0});
    EXPECT_EQ(r.category, RegretCategory::zero);
    EXPECT_EQ(r.total(), 0.0);
  }
}

TEST(RegretTest, EmptySetCostsTheBudget) {
  const auto r = regret(0, 0, {0, 5, 5}, kDefault);
  EXPECT_EQ(r.category, RegretCategory::unsatisfied);
  EXPECT_DOUBLE_EQ(r.total(), 5.0);
}

TEST(RegretTest, BreakdownSplitsCardinality) {
  const auto r = regret(4, 3, {0, 6, 10}, {0.5, 0.25});
  EXPECT_DOUBLE_EQ(r.cardinality, 1.0);
  EXPECT_DOUBLE_EQ(r.monetary, 7.5);
}

TEST(RegretTest, ValidatesInputs) {
  EXPECT_THROW(validate(Advertiser{0, 0, 1}), ArgumentError);
  EXPECT_THROW(validate(Advertiser{0, 1, -1}), ArgumentError);
  EXPECT_NO_THROW(validate(Advertiser{0, 1, 0}));
  EXPECT_THROW(validate(RegretParams{1.5, 0}), ArgumentError);
  EXPECT_THROW(validate(RegretParams{0.5, -1}), ArgumentError);
}

TEST(RegretTest, PropertiesOverRandomInputs) {
  Rng rng(17);
  for (int t = 0; t < 5000; ++t) {
    const Advertiser a{0, 1 + 20 * rng.uniform(), 50 * rng.uniform()};
    const double influence = 25 * rng.uniform();
    const std::size_t seeds = rng.index(10);
    const RegretParams p{rng.uniform(), 0.1 * rng.uniform()};
    const auto r = regret(seeds, influence, a, p);
    EXPECT_GE(r.total(), 0.0);
    const auto expected = influence < a.demand   ? RegretCategory::unsatisfied
                          : influence > a.demand ? RegretCategory::excessive
                                                 : RegretCategory::zero;
    EXPECT_EQ(r.category, expected);
    EXPECT_NEAR(r.total(), reference_regret(seeds, influence, a.demand, a.budget, p.gamma, p.delta),
                1e-9 * std::max(1.0, r.total()));

    // Raising gamma never raises regret.
    const RegretParams higher{std::min(1.0, p.gamma + rng.uniform()), p.delta};
    EXPECT_LE(regret(seeds, influence, a, higher).total(), r.total() + 1e-12);

    // Budgets and delta scale together.
    const double c = 0.1 + 10 * rng.uniform();
    const Advertiser scaled{0, a.demand, a.budget * c};
    EXPECT_NEAR(regret(seeds, influence, scaled, {p.gamma, p.delta * c}).total(), c * r.total(),
                1e-9 * std::max(1.0, c * r.total()));
  }
}

TEST(MarginalDecreaseTest, FirstSeedOfWorkedExample) {
  const auto ex = worked_example();
  const auto est = InfluenceEstimator::additive(ex.values);
  const double d = marginal_decrease(ex.graph, est, {}, 8, {4, 9, 11}, kDefault);
  EXPECT_NEAR(d, 11 - reference_regret(1, 3, 9, 11, 0.5, 0.01), 1e-12);
  EXPECT_NEAR(d, 1.823333, 1e-6);
}

TEST(MarginalDecreaseTest, NegativeCases) {
  const Graph g = Graph::isolated(3);
  // Zero-value node: pays delta, gains nothing.
  const auto est = InfluenceEstimator::additive({2, 0, 3});
  const std::vector<NodeId> s{0};
  EXPECT_LT(marginal_decrease(g, est, s, 1, {0, 5, 10}, kDefault), 0.0);
  // Leaving the zero branch.
  EXPECT_LT(marginal_decrease(g, est, s, 2, {0, 2, 10}, kDefault), 0.0);
  EXPECT_THROW(marginal_decrease(g, est, s, 0, {0, 5, 10}, kDefault), ArgumentError);
}

Allocation listed_sets(const std::vector<Advertiser>& ads, const InfluenceEstimator& est,
                      const Graph& g) {
  // Sets listed for the illustrative allocation, 0-based.
  const std::vector<std::vector<NodeId>> sets{{2, 11}, {1, 5}, {3, 6}, {0, 4, 7}, {8, 9, 10}, {}};
  Allocation alloc;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    AdvertiserAllocation e;
    e.advertiser = i;
    e.seeds = sets[i];
    e.influence = est.estimate(g, sets[i]);
    e.regret = regret(sets[i].size(), e.influence, ads[i], kDefault);
    alloc.entries.push_back(e);
  }
  return alloc;
}

TEST(TotalRegretTest, IllustrativeAllocation) {
  const auto ex = worked_example();
  const auto est = InfluenceEstimator::additive(ex.values);
  const Allocation alloc = listed_sets(ex.advertisers, est, ex.graph);
  const double expected[] = {1.686667, 1.730000, 6.752222, 5.000000};
  for (std::size_t i = 2; i < 6; ++i) EXPECT_NEAR(alloc.entries[i].regret.total(), expected[i - 2], 1e-6);
  double sum = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& a = ex.advertisers[i];
    sum += reference_regret(alloc.entries[i].seeds.size(), alloc.entries[i].influence, a.demand,
                            a.budget, 0.5, 0.01);
  }
  EXPECT_NEAR(total_regret(alloc, ex.advertisers, kDefault), sum, 1e-9);
  EXPECT_NEAR(total_regret(alloc, ex.advertisers, kDefault), 15.168889, 1e-6);
}

TEST(TotalRegretTest, SummaryBuckets) {
  const auto ex = worked_example();
  const auto est = InfluenceEstimator::additive(ex.values);
  Allocation alloc = listed_sets(ex.advertisers, est, ex.graph);
  const auto s = summarize(alloc, ex.advertisers, kDefault);
  EXPECT_NEAR(s.total, s.excessive + s.unsatisfied, 1e-12);
  EXPECT_NEAR(s.excessive, 1.686667 + 1.73, 1e-6);
  EXPECT_EQ(s.eliminated, 0u);

  alloc.entries[5].status = AdvertiserStatus::eliminated;
  EXPECT_NEAR(total_regret(alloc, ex.advertisers, kDefault), 15.168889 - 5, 1e-6);
  EXPECT_NEAR(total_regret(alloc, ex.advertisers, kDefault, EliminationAccounting::charge_full_budget),
              15.168889, 1e-6);
  EXPECT_EQ(summarize(alloc, ex.advertisers, kDefault).eliminated, 1u);
}

TEST(TotalRegretTest, SatisfiedAndSingleAdvertiser) {
  const std::vector<Advertiser> ads{{0, 4, 10}, {1, 2, 3}};
  Allocation alloc;
  alloc.entries = {{0, {0, 1}, 0, 4, {}, AdvertiserStatus::served}, {1, {2}, 0, 2, {}, AdvertiserStatus::served}};
  EXPECT_EQ(total_regret(alloc, ads, kDefault), 0.0);
  alloc.entries.resize(1);
  alloc.entries[0].influence = 3;
  const std::vector<Advertiser> one{ads[0]};
  EXPECT_DOUBLE_EQ(total_regret(alloc, one, kDefault), regret(2, 3, ads[0], kDefault).total());
}

TEST(TotalRegretTest, PermutationInvariant) {
  const auto ex = worked_example();
  const auto est = InfluenceEstimator::additive(ex.values);
  const Allocation alloc = listed_sets(ex.advertisers, est, ex.graph);
  std::vector<std::size_t> perm{5, 3, 0, 4, 1, 2};
  std::vector<Advertiser> ads;
  Allocation permuted;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    ads.push_back(ex.advertisers[perm[j]]);
    auto e = alloc.entries[perm[j]];
    e.advertiser = j;
    permuted.entries.push_back(e);
  }
  EXPECT_NEAR(total_regret(permuted, ads, kDefault), total_regret(alloc, ex.advertisers, kDefault), 1e-12);
}

}  // namespace
}  // namespace seedalloc
