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

#ifndef SEEDALLOC_INFLUENCE_HPP_
#define SEEDALLOC_INFLUENCE_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "seedalloc/graph.hpp"

namespace seedalloc {

inline constexpr std::size_t kDefaultExactArcLimit = 16;
inline constexpr std::uint32_t kDefaultSamples = 100;

// Expected Independent Cascade spread by enumerating all 2^m live-arc
// realizations. Seeds count as activated. Throws RefusalError when the graph
// has more than `arc_limit` arcs.
double exact_influence(const Graph& graph, std::span<const NodeId> seeds,
                       std::size_t arc_limit = kDefaultExactArcLimit);

// Sum of per-node values; ignores topology. Throws ArgumentError when a seed
// has no value.
double additive_influence(std::span<const double> values, std::span<const NodeId> seeds);

// Whether arc `arc_id` is live in the cascade sample keyed by `sample_key`.
// A pure function, so every seed set sees the same realization of a sample.
bool arc_is_live(std::uint64_t sample_key, std::size_t arc_id, double probability);

// Estimates I(S). Monte-Carlo estimates are a pure function of
// (graph, S, samples, seed); worker count never changes the result.
class InfluenceEstimator {
 public:
  enum class Mode { monte_carlo, exact, additive };

  static InfluenceEstimator monte_carlo(std::uint32_t samples = kDefaultSamples,
                                        std::uint64_t seed = 0, unsigned threads = 1);
  static InfluenceEstimator exact(std::size_t arc_limit = kDefaultExactArcLimit);
  static InfluenceEstimator additive(std::vector<double> values);

  Mode mode() const { return mode_; }
  std::uint32_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }
  unsigned threads() const { return threads_; }
  std::size_t arc_limit() const { return arc_limit_; }
  std::span<const double> values() const { return values_; }

  double estimate(const Graph& graph, std::span<const NodeId> seeds) const;

  // Returns I(S u {c}) for every candidate c, equal to calling estimate on
  // each extended set (bit-identical for Monte-Carlo). Candidates must not
  // be in S.
  std::vector<double> estimate_extensions(const Graph& graph, std::span<const NodeId> seeds,
                                          std::span<const NodeId> candidates) const;

  // Per-sample activation counts |A_r(S)|, r = 0..R-1. Monte-Carlo only.
  std::vector<std::uint32_t> sample_counts(const Graph& graph,
                                           std::span<const NodeId> seeds) const;

  // Number of seed-set evaluations performed so far (extensions count one
  // per candidate).
  std::uint64_t evaluations() const { return counter_->load(std::memory_order_relaxed); }

  std::string describe() const;

 private:
  InfluenceEstimator() : counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}
  void count(std::uint64_t k) const { counter_->fetch_add(k, std::memory_order_relaxed); }
  void check_ids(const Graph& graph, std::span<const NodeId> ids) const;

  Mode mode_ = Mode::monte_carlo;
  std::uint32_t samples_ = kDefaultSamples;
  std::uint64_t seed_ = 0;
  unsigned threads_ = 1;
  std::size_t arc_limit_ = kDefaultExactArcLimit;
  std::vector<double> values_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

// Singleton influences I({u}) for every node plus their sum, the provider's
// supply.
struct SingletonTable {
  std::vector<double> influence;
  double supply = 0.0;
};

SingletonTable singleton_supply(const InfluenceEstimator& estimator, const Graph& graph);

}  // namespace seedalloc

#endif  // SEEDALLOC_INFLUENCE_HPP_
