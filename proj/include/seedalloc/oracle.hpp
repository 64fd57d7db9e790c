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

#ifndef SEEDALLOC_ORACLE_HPP_
#define SEEDALLOC_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "seedalloc/allocation.hpp"
#include "seedalloc/graph.hpp"
#include "seedalloc/influence.hpp"
#include "seedalloc/regret.hpp"

namespace seedalloc {

struct OracleLimits {
  std::size_t max_nodes = 8;
  std::size_t max_advertisers = 3;
  std::size_t max_arcs = kDefaultExactArcLimit;
};

struct OracleResult {
  Allocation allocation;
  double regret = 0.0;
  std::uint64_t feasible_examined = 0;
};

// Enumerates every assignment of each node to one advertiser or to none,
// keeps those with cost(S_i) <= B_i for all i, and returns the one with the
// least total regret under exact influence. Ties go to the lexicographically
// smallest assignment (node 0 most significant, "none" < advertiser 0 < ...).
// Throws RefusalError beyond `limits`.
OracleResult brute_force_optimal(const Graph& graph, const CostTable& costs,
                                 std::span<const Advertiser> advertisers,
                                 const RegretParams& params, const OracleLimits& limits = {});

}  // namespace seedalloc

#endif  // SEEDALLOC_ORACLE_HPP_
