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

#include "seedalloc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <fmt/format.h>

#include "seedalloc/errors.hpp"
#include "seedalloc/rng.hpp"

namespace seedalloc {

namespace {

bool valid_probability(double p) { return p > 0.0 && p <= 1.0; }

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_arcs(std::size_t node_count, std::vector<ArcSpec> arcs,
                       bool directed) {
  if (node_count > UINT32_MAX) throw ArgumentError("too many nodes");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(arcs.size() * 2);
  for (const auto& a : arcs) {
    if (a.source >= node_count || a.target >= node_count)
      throw ArgumentError(fmt::format("arc ({}, {}) references a node outside [0, {})",
                                      a.source, a.target, node_count));
    if (a.source == a.target)
      throw ArgumentError(fmt::format("self-loop on node {}", a.source));
    if (!valid_probability(a.probability))
      throw ArgumentError(fmt::format("arc ({}, {}) has probability {} outside (0, 1]",
                                      a.source, a.target, a.probability));
    NodeId lo = a.source, hi = a.target;
    if (!directed && lo > hi) std::swap(lo, hi);
    if (!seen.insert(pair_key(lo, hi)).second)
      throw ArgumentError(fmt::format("duplicate arc ({}, {})", a.source, a.target));
  }
  if (!directed) {
    const std::size_t given = arcs.size();
    arcs.reserve(given * 2);
    for (std::size_t i = 0; i < given; ++i)
      arcs.push_back({arcs[i].target, arcs[i].source, arcs[i].probability});
  }
  std::sort(arcs.begin(), arcs.end(), [](const ArcSpec& a, const ArcSpec& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });

  Graph g;
  g.directed_ = directed;
  g.offsets_.assign(node_count + 1, 0);
  g.in_degree_.assign(node_count, 0);
  g.arcs_.reserve(arcs.size());
  for (const auto& a : arcs) {
    ++g.offsets_[a.source + 1];
    ++g.in_degree_[a.target];
    g.arcs_.push_back({a.target, a.probability});
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  return g;
}

Graph Graph::isolated(std::size_t node_count) { return from_arcs(node_count, {}, true); }

NodeId Graph::source_of(std::size_t arc_id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), arc_id);
  return static_cast<NodeId>(std::distance(offsets_.begin(), it) - 1);
}

std::size_t Graph::find_arc(NodeId u, NodeId v) const {
  auto out = out_arcs(u);
  auto it = std::lower_bound(out.begin(), out.end(), v,
                             [](const Arc& a, NodeId t) { return a.target < t; });
  if (it == out.end() || it->target != v) return arcs_.size();
  return offsets_[u] + static_cast<std::size_t>(it - out.begin());
}

Graph Graph::with_probabilities(std::vector<double> probabilities) const {
  if (probabilities.size() != arcs_.size())
    throw ArgumentError("probability vector does not match arc count");
  Graph g = *this;
  for (std::size_t i = 0; i < g.arcs_.size(); ++i) {
    if (!valid_probability(probabilities[i]))
      throw ArgumentError(fmt::format("probability {} outside (0, 1]", probabilities[i]));
    g.arcs_[i].probability = probabilities[i];
  }
  return g;
}

Graph Graph::prefix_subgraph(std::size_t limit) const {
  const std::size_t n = std::min(limit, node_count());
  std::vector<ArcSpec> kept;
  for (NodeId u = 0; u < n; ++u)
    for (const Arc& a : out_arcs(u))
      if (a.target < n && (directed_ || u < a.target))
        kept.push_back({u, a.target, a.probability});
  Graph g = from_arcs(n, std::move(kept), directed_);
  if (!labels_.empty()) g.labels_.assign(labels_.begin(), labels_.begin() + n);
  return g;
}

Graph attach_labels(Graph graph, std::vector<std::int64_t> labels) {
  graph.labels_ = std::move(labels);
  return graph;
}

LoadResult load_edge_list(std::istream& in, bool directed) {
  LoadResult result;
  std::unordered_map<std::int64_t, NodeId> dense;
  std::vector<std::int64_t> labels;
  std::vector<ArcSpec> arcs;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](std::int64_t label) {
    auto [it, inserted] = dense.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view rest(line);
    auto skip_space = [&] {
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    };
    skip_space();
    if (rest.empty() || rest.front() == '#') continue;

    std::int64_t ends[2];
    for (auto& e : ends) {
      skip_space();
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
      if (ec != std::errc() || (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t'))
        throw ParseError(line_no, "expected two integer node labels");
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    }
    double p = 1.0;
    skip_space();
    if (!rest.empty()) {
      // from_chars for double is unavailable on older libstdc++.
      std::string token(rest);
      std::size_t used = 0;
      try {
        p = std::stod(token, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "malformed probability column");
      }
      rest.remove_prefix(used);
      skip_space();
      if (!rest.empty()) throw ParseError(line_no, "trailing characters");
      if (!valid_probability(p)) throw ParseError(line_no, "probability outside (0, 1]");
    }

    const NodeId u = intern(ends[0]);
    const NodeId v = intern(ends[1]);
    if (u == v) {
      ++result.self_loops_skipped;
      continue;
    }
    NodeId lo = u, hi = v;
    if (!directed && lo > hi) std::swap(lo, hi);
    if (!seen.insert(pair_key(lo, hi)).second) {
      ++result.duplicates_skipped;
      continue;
    }
    arcs.push_back({u, v, p});
  }
  Graph graph = Graph::from_arcs(labels.size(), std::move(arcs), directed);
  result.graph = attach_labels(std::move(graph), std::move(labels));
  return result;
}

LoadResult load_edge_list_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return load_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << "# " << (graph.directed() ? "directed" : "undirected") << " nodes "
      << graph.node_count() << " edges " << graph.edge_count() << '\n';
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    // A self-loop line is the only way to declare an isolated node.
    if (graph.total_degree(u) == 0) out << graph.label(u) << ' ' << graph.label(u) << '\n';
    for (const Arc& a : graph.out_arcs(u)) {
      if (!graph.directed() && a.target < u) continue;
      out << graph.label(u) << ' ' << graph.label(a.target) << ' '
          << fmt::format("{}", a.probability) << '\n';
    }
  }
}

Graph assign_uniform_probability(const Graph& graph, double probability) {
  if (!valid_probability(probability))
    throw ArgumentError(fmt::format("uniform probability {} outside (0, 1]", probability));
  return graph.with_probabilities(std::vector<double>(graph.arc_count(), probability));
}

Graph assign_trivalency(const Graph& graph, std::uint64_t seed) {
  static constexpr double kLevels[3] = {0.1, 0.01, 0.001};
  Rng rng(seed);
  std::vector<double> probs(graph.arc_count(), 0.0);
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const std::size_t base = graph.first_arc(u);
    auto out = graph.out_arcs(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const NodeId v = out[i].target;
      if (!graph.directed() && v < u) {
        probs[base + i] = probs[graph.find_arc(v, u)];
        continue;
      }
      probs[base + i] = kLevels[rng.index(3)];
    }
  }
  return graph.with_probabilities(std::move(probs));
}

CostTable degree_proportional_costs(const Graph& graph, double h) {
  const std::size_t n = graph.node_count();
  std::size_t degree_sum = 0;
  for (NodeId u = 0; u < n; ++u) degree_sum += graph.total_degree(u);
  if (degree_sum == 0)
    throw ArgumentError("degree-proportional costs need at least one arc");
  std::vector<double> costs(n);
  const double unit = h * static_cast<double>(n) / static_cast<double>(degree_sum);
  for (NodeId u = 0; u < n; ++u) costs[u] = unit * static_cast<double>(graph.total_degree(u));
  return CostTable(std::move(costs), h);
}

GraphStats graph_stats(const Graph& graph) {
  GraphStats s;
  s.nodes = graph.node_count();
  s.edges = graph.edge_count();
  if (s.nodes > 0) s.average_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes);
  for (NodeId u = 0; u < s.nodes; ++u) {
    std::size_t d = graph.total_degree(u);
    if (!graph.directed()) d /= 2;
    s.max_degree = std::max(s.max_degree, d);
  }
  return s;
}

}  // namespace seedalloc
