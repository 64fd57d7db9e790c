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

#include "seedalloc/instances.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "seedalloc/rng.hpp"

namespace seedalloc {

TinyInstance random_tiny_instance(std::uint64_t seed, std::size_t nodes, std::size_t advertisers,
                                  std::size_t max_arcs) {
  Rng rng(seed);
  TinyInstance inst;
  std::set<std::pair<NodeId, NodeId>> used;
  std::vector<ArcSpec> arcs;
  if (nodes >= 2) {
    const std::size_t wanted = rng.index(max_arcs + 1);
    for (std::size_t tries = 0; arcs.size() < wanted && tries < 20 * max_arcs + 20; ++tries) {
      const auto u = static_cast<NodeId>(rng.index(nodes));
      const auto v = static_cast<NodeId>(rng.index(nodes));
      if (u == v || !used.insert({u, v}).second) continue;
      // Probabilities on a 0.1 grid keep exact values easy to eyeball.
      const double p = static_cast<double>(1 + rng.index(10)) / 10.0;
      arcs.push_back({u, v, p});
    }
  }
  inst.graph = Graph::from_arcs(nodes, std::move(arcs), true);

  std::vector<double> costs(nodes);
  for (auto& c : costs) c = std::round(rng.uniform(1.0, 6.0) * 2.0) / 2.0;
  inst.costs = CostTable(std::move(costs), 0.0);

  for (std::size_t i = 0; i < advertisers; ++i) {
    Advertiser a;
    a.id = i;
    a.demand = static_cast<double>(1 + rng.index(nodes == 0 ? 1 : nodes));
    a.budget = static_cast<double>(2 + rng.index(14));
    inst.advertisers.push_back(a);
  }
  return inst;
}

Graph path_graph(std::size_t nodes, double probability) {
  std::vector<ArcSpec> arcs;
  for (std::size_t u = 0; u + 1 < nodes; ++u)
    arcs.push_back({static_cast<NodeId>(u), static_cast<NodeId>(u + 1), probability});
  return Graph::from_arcs(nodes, std::move(arcs), true);
}

Graph star_graph(std::size_t nodes, double probability) {
  std::vector<ArcSpec> arcs;
  for (std::size_t v = 1; v < nodes; ++v) arcs.push_back({0, static_cast<NodeId>(v), probability});
  return Graph::from_arcs(nodes, std::move(arcs), true);
}

}  // namespace seedalloc
