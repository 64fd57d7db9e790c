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

#include "seedalloc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "seedalloc/errors.hpp"
#include "seedalloc/rng.hpp"

namespace seedalloc {

double median_cost_per_influence(const CostTable& costs, std::span<const double> singletons) {
  std::vector<double> ratios;
  for (std::size_t u = 0; u < singletons.size() && u < costs.size(); ++u)
    if (singletons[u] > 0.0) ratios.push_back(costs[static_cast<NodeId>(u)] / singletons[u]);
  if (ratios.empty()) throw ArgumentError("no node has positive singleton influence");
  std::sort(ratios.begin(), ratios.end());
  const std::size_t mid = ratios.size() / 2;
  return ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

std::vector<Advertiser> generate_advertisers(double supply, const ScenarioParams& params) {
  if (!(supply > 0.0)) throw ArgumentError("supply must be positive");
  if (!(params.lambda > 0.0) || !(params.omega > 0.0))
    throw ArgumentError("lambda and omega must be positive");
  if (params.advertisers == 0) throw ArgumentError("need at least one advertiser");
  if (!(params.alpha_spread >= 0.0 && params.alpha_spread < 1.0))
    throw ArgumentError("alpha spread must lie in [0, 1)");
  if (!(params.beta.unit_price > 0.0) || !(params.beta.lo > 0.0) || params.beta.hi < params.beta.lo)
    throw ArgumentError("invalid payment factor policy");

  const std::size_t count = params.advertisers;
  // The epsilon absorbs representation error in products like 1.2 * 100.
  const double target_real = std::floor(params.lambda * supply + 1e-9);
  if (target_real < static_cast<double>(count))
    throw GenerationError(fmt::format(
        "total demand floor({} * {}) = {} cannot give {} advertisers a demand of at least 1",
        params.lambda, supply, target_real, count));
  const auto target = static_cast<long long>(target_real);

  Rng rng(params.seed);
  std::vector<double> raw(count);
  for (auto& r : raw)
    r = rng.uniform(1.0 - params.alpha_spread, 1.0 + params.alpha_spread) * params.omega * supply;
  const double scale = target_real / std::accumulate(raw.begin(), raw.end(), 0.0);

  std::vector<long long> demand(count);
  std::vector<double> remainder(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = raw[i] * scale;
    demand[i] = std::max<long long>(1, static_cast<long long>(std::floor(x)));
    remainder[i] = x - std::floor(x);
  }
  long long total = std::accumulate(demand.begin(), demand.end(), 0LL);

  std::vector<std::size_t> by_remainder(count);
  std::iota(by_remainder.begin(), by_remainder.end(), 0);
  std::stable_sort(by_remainder.begin(), by_remainder.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; total < target; k = (k + 1) % count, ++total) ++demand[by_remainder[k]];
  while (total > target) {
    auto it = std::max_element(demand.begin(), demand.end());
    --*it;
    --total;
  }

  std::vector<Advertiser> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double beta = params.beta.unit_price * rng.uniform(params.beta.lo, params.beta.hi);
    out[i].id = i;
    out[i].demand = static_cast<double>(demand[i]);
    out[i].budget = std::max(1.0, std::floor(beta * out[i].demand));
  }
  return out;
}

std::size_t pair_omega_with_count(double omega, std::optional<std::size_t> explicit_count) {
  if (explicit_count) {
    if (*explicit_count == 0) throw ArgumentError("advertiser count must be positive");
    return *explicit_count;
  }
  static constexpr std::pair<double, std::size_t> kPreset[] = {
      {0.10, 100}, {0.30, 50}, {0.50, 20}, {0.70, 10}, {0.90, 5}};
  for (const auto& [w, count] : kPreset)
    if (std::abs(omega - w) < 1e-9) return count;
  throw ArgumentError(fmt::format(
      "omega {} has no preset advertiser count; give the count explicitly", omega));
}

void write_population(std::ostream& out, std::span<const Advertiser> advertisers) {
  out << "# id demand budget\n";
  for (const auto& a : advertisers) out << fmt::format("{} {} {}\n", a.id, a.demand, a.budget);
}

std::vector<Advertiser> read_population(std::istream& in) {
  std::vector<Advertiser> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Advertiser a;
    std::string extra;
    if (!(fields >> a.id >> a.demand >> a.budget) || (fields >> extra))
      throw ParseError(line_no, "expected 'id demand budget'");
    validate(a);
    out.push_back(a);
  }
  return out;
}

}  // namespace seedalloc
