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

#ifndef SEEDALLOC_INSTANCES_HPP_
#define SEEDALLOC_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seedalloc/graph.hpp"
#include "seedalloc/regret.hpp"

namespace seedalloc {

struct TinyInstance {
  Graph graph;
  CostTable costs;
  std::vector<Advertiser> advertisers;
};

// Random directed graph with at most `max_arcs` arcs and probabilities in
// [0.1, 1], costs in [1, 6], integer demands in [1, n] and budgets in
// [2, 15]. Small enough for exact influence and the brute-force oracle.
TinyInstance random_tiny_instance(std::uint64_t seed, std::size_t nodes, std::size_t advertisers,
                                  std::size_t max_arcs = 10);

// Directed path 0 -> 1 -> ... -> n-1 with a common probability.
Graph path_graph(std::size_t nodes, double probability);

// Hub 0 with arcs to every other node.
Graph star_graph(std::size_t nodes, double probability);

}  // namespace seedalloc

#endif  // SEEDALLOC_INSTANCES_HPP_
