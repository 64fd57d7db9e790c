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


// Independent reference implementations used to derive expected values, plus
// allocation invariant checks shared by the unit and acceptance suites.

#ifndef SEEDALLOC_TESTS_SUPPORT_HPP_
#define SEEDALLOC_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "seedalloc/allocation.hpp"
#include "seedalloc/allocators.hpp"
#include "seedalloc/graph.hpp"
#include "seedalloc/instances.hpp"
#include "seedalloc/regret.hpp"

namespace seedalloc::testing {

// Expected spread by summing over every live-arc world, with reachability
// computed as a bitmask fixpoint. n <= 32, m <= 20.
double reference_influence(const Graph& graph, const std::vector<NodeId>& seeds);

// Regret written straight from the three-case definition.
double reference_regret(std::size_t seed_count, double influence, double demand, double budget,
                        double gamma, double delta);

// Minimum total regret over budget-feasible disjoint assignments, by depth
// first search with reference_influence.
double reference_optimum(const TinyInstance& instance, double gamma, double delta);

// Violations of the properties every allocator must hold: disjoint seed
// sets, recorded influence/spend/regret consistent with the seeds, budget
// semantics of the configured mode and the stop gates. Empty when clean.
std::vector<std::string> allocation_violations(const AllocationProblem& problem,
                                               const AllocatorConfig& config,
                                               const Allocation& allocation);

std::string temp_path(const std::string& name);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace seedalloc::testing

#endif  // SEEDALLOC_TESTS_SUPPORT_HPP_
