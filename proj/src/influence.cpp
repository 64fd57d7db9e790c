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

#include "seedalloc/influence.hpp"

#include <algorithm>
#include <thread>

#include <fmt/format.h>

#include "seedalloc/errors.hpp"
#include "seedalloc/rng.hpp"

namespace seedalloc {

namespace {

// Visited marks that reset in O(1) by bumping the epoch.
class EpochMarks {
 public:
  explicit EpochMarks(std::size_t n) : marks_(n, 0) {}
  void next() {
    if (++epoch_ == 0) {
      std::fill(marks_.begin(), marks_.end(), 0);
      epoch_ = 1;
    }
  }
  bool test(NodeId u) const { return marks_[u] == epoch_; }
  bool set(NodeId u) {
    if (marks_[u] == epoch_) return false;
    marks_[u] = epoch_;
    return true;
  }

 private:
  std::vector<std::uint32_t> marks_;
  std::uint32_t epoch_ = 0;
};

// Breadth-first cascade over live arcs. Nodes already marked in `blocked`
// (when given) are treated as activated elsewhere and neither counted nor
// expanded. Returns the number of newly activated nodes.
template <typename LivePredicate>
std::uint32_t cascade(const Graph& graph, std::span<const NodeId> seeds, EpochMarks& marks,
                      const EpochMarks* blocked, std::vector<NodeId>& frontier,
                      LivePredicate&& live) {
  frontier.clear();
  for (NodeId s : seeds) {
    if (blocked != nullptr && blocked->test(s)) continue;
    if (marks.set(s)) frontier.push_back(s);
  }
  std::size_t head = 0;
  while (head < frontier.size()) {
    const NodeId u = frontier[head++];
    const std::size_t base = graph.first_arc(u);
    auto out = graph.out_arcs(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const NodeId v = out[i].target;
      if (marks.test(v) || (blocked != nullptr && blocked->test(v))) continue;
      if (!live(base + i, out[i].probability)) continue;
      marks.set(v);
      frontier.push_back(v);
    }
  }
  return static_cast<std::uint32_t>(frontier.size());
}

// Splits [0, total) into `workers` contiguous chunks and runs body(begin, end,
// worker) on each.
template <typename Body>
void run_chunks(std::size_t total, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (workers == 1) {
    body(std::size_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = total * w / workers;
    const std::size_t end = total * (w + 1) / workers;
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

std::uint64_t sample_key(std::uint64_t seed, std::size_t sample) { return mix_seed(seed, sample); }

}  // namespace

bool arc_is_live(std::uint64_t key, std::size_t arc_id, double probability) {
  if (probability >= 1.0) return true;
  const std::uint64_t bits = splitmix64(key ^ (static_cast<std::uint64_t>(arc_id) * 0x9E3779B97F4A7C15ULL));
  return unit_interval(bits) < probability;
}

double exact_influence(const Graph& graph, std::span<const NodeId> seeds, std::size_t arc_limit) {
  const std::size_t m = graph.arc_count();
  if (m > arc_limit)
    throw RefusalError(fmt::format("exact influence refuses {} arcs (limit {})", m, arc_limit));
  for (NodeId s : seeds)
    if (s >= graph.node_count()) throw ArgumentError(fmt::format("seed {} out of range", s));
  if (seeds.empty()) return 0.0;

  auto arcs = graph.arcs();
  EpochMarks marks(graph.node_count());
  std::vector<NodeId> frontier;
  double expected = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double weight = 1.0;
    for (std::size_t i = 0; i < m && weight > 0.0; ++i)
      weight *= ((mask >> i) & 1) ? arcs[i].probability : 1.0 - arcs[i].probability;
    if (weight == 0.0) continue;
    marks.next();
    const auto reached = cascade(graph, seeds, marks, nullptr, frontier,
                                 [mask](std::size_t arc, double) { return ((mask >> arc) & 1) != 0; });
    expected += weight * reached;
  }
  return expected;
}

double additive_influence(std::span<const double> values, std::span<const NodeId> seeds) {
  double total = 0.0;
  for (NodeId s : seeds) {
    if (s >= values.size()) throw ArgumentError(fmt::format("no additive value for node {}", s));
    total += values[s];
  }
  return total;
}

InfluenceEstimator InfluenceEstimator::monte_carlo(std::uint32_t samples, std::uint64_t seed,
                                                   unsigned threads) {
  if (samples == 0) throw ArgumentError("Monte-Carlo estimator needs at least one sample");
  InfluenceEstimator e;
  e.mode_ = Mode::monte_carlo;
  e.samples_ = samples;
  e.seed_ = seed;
  e.threads_ = std::max(1u, threads);
  return e;
}

InfluenceEstimator InfluenceEstimator::exact(std::size_t arc_limit) {
  if (arc_limit > 30) throw ArgumentError("exact enumeration is capped at 30 arcs");
  InfluenceEstimator e;
  e.mode_ = Mode::exact;
  e.arc_limit_ = arc_limit;
  return e;
}

InfluenceEstimator InfluenceEstimator::additive(std::vector<double> values) {
  for (double v : values)
    if (!(v >= 0.0)) throw ArgumentError("additive influence values must be non-negative");
  InfluenceEstimator e;
  e.mode_ = Mode::additive;
  e.values_ = std::move(values);
  return e;
}

void InfluenceEstimator::check_ids(const Graph& graph, std::span<const NodeId> ids) const {
  const std::size_t n = mode_ == Mode::additive ? values_.size() : graph.node_count();
  for (NodeId u : ids)
    if (u >= n) throw ArgumentError(fmt::format("node {} out of range (n = {})", u, n));
}

std::vector<std::uint32_t> InfluenceEstimator::sample_counts(const Graph& graph,
                                                             std::span<const NodeId> seeds) const {
  if (mode_ != Mode::monte_carlo) throw ArgumentError("sample counts need a Monte-Carlo estimator");
  check_ids(graph, seeds);
  count(1);
  std::vector<std::uint32_t> counts(samples_, 0);
  if (seeds.empty()) return counts;
  run_chunks(samples_, threads_, [&](std::size_t begin, std::size_t end, unsigned) {
    EpochMarks marks(graph.node_count());
    std::vector<NodeId> frontier;
    for (std::size_t r = begin; r < end; ++r) {
      const std::uint64_t key = sample_key(seed_, r);
      marks.next();
      counts[r] = cascade(graph, seeds, marks, nullptr, frontier,
                          [key](std::size_t arc, double p) { return arc_is_live(key, arc, p); });
    }
  });
  return counts;
}

double InfluenceEstimator::estimate(const Graph& graph, std::span<const NodeId> seeds) const {
  check_ids(graph, seeds);
  switch (mode_) {
    case Mode::additive:
      count(1);
      return additive_influence(values_, seeds);
    case Mode::exact:
      count(1);
      return exact_influence(graph, seeds, arc_limit_);
    case Mode::monte_carlo: {
      if (seeds.empty()) {
        count(1);
        return 0.0;
      }
      std::uint64_t total = 0;
      for (std::uint32_t c : sample_counts(graph, seeds)) total += c;
      return static_cast<double>(total) / samples_;
    }
  }
  return 0.0;
}

std::vector<double> InfluenceEstimator::estimate_extensions(const Graph& graph,
                                                            std::span<const NodeId> seeds,
                                                            std::span<const NodeId> candidates) const {
  check_ids(graph, seeds);
  check_ids(graph, candidates);
  std::vector<double> out(candidates.size(), 0.0);
  if (mode_ != Mode::monte_carlo) {
    std::vector<NodeId> extended(seeds.begin(), seeds.end());
    extended.push_back(0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      extended.back() = candidates[i];
      out[i] = estimate(graph, extended);
    }
    return out;
  }

  count(candidates.size());
  const std::size_t n = graph.node_count();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads_, samples_));
  // Integer totals make the reduction order-independent.
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(candidates.size(), 0));
  run_chunks(samples_, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    EpochMarks base_marks(n);
    EpochMarks extra_marks(n);
    std::vector<NodeId> frontier;
    auto& totals = partial[w];
    for (std::size_t r = begin; r < end; ++r) {
      const std::uint64_t key = sample_key(seed_, r);
      auto live = [key](std::size_t arc, double p) { return arc_is_live(key, arc, p); };
      base_marks.next();
      const std::uint32_t base = seeds.empty() ? 0 : cascade(graph, seeds, base_marks, nullptr, frontier, live);
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const NodeId c = candidates[i];
        std::uint32_t extra = 0;
        if (!base_marks.test(c)) {
          extra_marks.next();
          const NodeId single[1] = {c};
          extra = cascade(graph, single, extra_marks, &base_marks, frontier, live);
        }
        totals[i] += base + extra;
      }
    }
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::uint64_t total = 0;
    for (const auto& p : partial) total += p[i];
    out[i] = static_cast<double>(total) / samples_;
  }
  return out;
}

std::string InfluenceEstimator::describe() const {
  switch (mode_) {
    case Mode::monte_carlo:
      return fmt::format("monte-carlo(R={}, seed={}, threads={})", samples_, seed_, threads_);
    case Mode::exact:
      return fmt::format("exact(arc_limit={})", arc_limit_);
    case Mode::additive:
      return fmt::format("additive({} values)", values_.size());
  }
  return "unknown";
}

SingletonTable singleton_supply(const InfluenceEstimator& estimator, const Graph& graph) {
  const std::size_t n = estimator.mode() == InfluenceEstimator::Mode::additive
                            ? estimator.values().size()
                            : graph.node_count();
  std::vector<NodeId> all(n);
  for (std::size_t u = 0; u < n; ++u) all[u] = static_cast<NodeId>(u);
  SingletonTable table;
  table.influence = estimator.estimate_extensions(graph, {}, all);
  for (double v : table.influence) table.supply += v;
  return table;
}

}  // namespace seedalloc
