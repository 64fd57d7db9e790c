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

#ifndef SEEDALLOC_GRAPH_HPP_
#define SEEDALLOC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace seedalloc {

using NodeId = std::uint32_t;

struct Arc {
  NodeId target;
  double probability;
};

struct ArcSpec {
  NodeId source;
  NodeId target;
  double probability;
};

// Immutable weighted digraph in CSR form. Undirected graphs store every edge
// as two arcs of equal probability. Out-arcs of each node are sorted by
// target, so an arc's position in `arcs()` is a stable arc id.
class Graph {
 public:
  Graph() = default;

  // Validates: ids < node_count, 0 < p <= 1, no self-loops, no duplicate
  // (source, target) pairs. For undirected graphs each edge is given once
  // (either orientation) and mirrored here.
  static Graph from_arcs(std::size_t node_count, std::vector<ArcSpec> arcs,
                         bool directed);

  // Graph with `node_count` nodes and no arcs.
  static Graph isolated(std::size_t node_count);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t arc_count() const { return arcs_.size(); }
  // Edges as a dataset table reports them: arcs for directed graphs,
  // unordered pairs for undirected ones.
  std::size_t edge_count() const { return directed_ ? arcs_.size() : arcs_.size() / 2; }
  bool directed() const { return directed_; }

  std::span<const Arc> out_arcs(NodeId u) const {
    return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
  }
  std::size_t first_arc(NodeId u) const { return offsets_[u]; }
  std::span<const Arc> arcs() const { return arcs_; }
  NodeId source_of(std::size_t arc_id) const;

  // In + out degree over stored arcs.
  std::size_t total_degree(NodeId u) const {
    return (offsets_[u + 1] - offsets_[u]) + in_degree_[u];
  }

  // Arc id of u -> v, or arc_count() when absent.
  std::size_t find_arc(NodeId u, NodeId v) const;

  // Original labels from the loaded file, indexed by dense id. Empty for
  // programmatically built graphs, in which case the label is the id.
  const std::vector<std::int64_t>& labels() const { return labels_; }
  std::int64_t label(NodeId u) const {
    return labels_.empty() ? static_cast<std::int64_t>(u) : labels_[u];
  }

  // Same topology, new per-arc probabilities (indexed by arc id).
  Graph with_probabilities(std::vector<double> probabilities) const;

  // Induced subgraph on dense ids [0, limit).
  Graph prefix_subgraph(std::size_t limit) const;

 private:
  friend Graph attach_labels(Graph graph, std::vector<std::int64_t> labels);

  bool directed_ = true;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::int64_t> labels_;
};

struct LoadResult {
  Graph graph;
  std::size_t self_loops_skipped = 0;
  std::size_t duplicates_skipped = 0;
};

// Reads a SNAP-style edge list: "u v" per line with an optional third
// probability column, '#' comment lines. Labels are remapped to dense ids in
// order of first appearance. Missing probabilities default to 1. Throws
// ParseError on malformed lines.
LoadResult load_edge_list(std::istream& in, bool directed);
LoadResult load_edge_list_file(const std::string& path, bool directed);

// Writes "label label probability" lines that load_edge_list reads back to
// the same labelled structure.
void write_edge_list(std::ostream& out, const Graph& graph);

Graph assign_uniform_probability(const Graph& graph, double probability);

// Each arc (each edge, for undirected graphs) draws from {0.1, 0.01, 0.001}.
Graph assign_trivalency(const Graph& graph, std::uint64_t seed);

class CostTable {
 public:
  CostTable() = default;
  CostTable(std::vector<double> costs, double scale)
      : costs_(std::move(costs)), scale_(scale) {}

  double operator[](NodeId u) const { return costs_[u]; }
  std::size_t size() const { return costs_.size(); }
  double scale() const { return scale_; }
  std::span<const double> values() const { return costs_; }

 private:
  std::vector<double> costs_;
  double scale_ = 0.0;
};

// cost(u) = h * n * deg(u) / sum_v deg(v), with total degree over stored arcs.
// Throws ArgumentError when the graph has no arcs.
CostTable degree_proportional_costs(const Graph& graph, double h);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double average_degree = 0.0;
  std::size_t max_degree = 0;
};

GraphStats graph_stats(const Graph& graph);

}  // namespace seedalloc

#endif  // SEEDALLOC_GRAPH_HPP_
