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

#include "seedalloc/harness.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "seedalloc/errors.hpp"
#include "seedalloc/influence.hpp"
#include "seedalloc/instances.hpp"
#include "seedalloc/oracle.hpp"
#include "seedalloc/rng.hpp"

namespace seedalloc {

using nlohmann::json;

namespace {

// Tags that separate the independent random streams derived from the master
// seed.
constexpr std::uint64_t kEstimatorStream = 0xE5717A7E;
constexpr std::uint64_t kTrivalencyStream = 0x7121;
constexpr std::uint64_t kScenarioStream = 0x5CE7A210;

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

template <typename T>
std::vector<T> list_or(const json& j, const char* key, std::vector<T> fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_array()) return {v.get<T>()};
  return v.get<std::vector<T>>();
}

template <typename Enum>
Enum parse_enum(const json& j, const char* key, Enum fallback,
                std::initializer_list<std::pair<const char*, Enum>> names) {
  if (!j.contains(key)) return fallback;
  const auto text = j.at(key).get<std::string>();
  for (const auto& [name, value] : names)
    if (text == name) return value;
  throw ArgumentError(fmt::format("invalid value '{}' for '{}'", text, key));
}

template <typename Enum>
const char* enum_name(Enum value, std::initializer_list<std::pair<const char*, Enum>> names) {
  for (const auto& [name, v] : names)
    if (v == value) return name;
  return "?";
}

const std::initializer_list<std::pair<const char*, BudgetMode>> kBudgetModes = {
    {"overdraft", BudgetMode::overdraft}, {"strict", BudgetMode::strict}};
const std::initializer_list<std::pair<const char*, ToleranceComparator>> kComparators = {
    {"greater", ToleranceComparator::greater}, {"greater_equal", ToleranceComparator::greater_equal}};
const std::initializer_list<std::pair<const char*, ThresholdMode>> kThresholds = {
    {"mean", ThresholdMode::mean}, {"positive", ThresholdMode::positive}};
const std::initializer_list<std::pair<const char*, EliminationAccounting>> kAccounting = {
    {"exclude", EliminationAccounting::exclude},
    {"charge_full_budget", EliminationAccounting::charge_full_budget}};

const std::set<std::string> kKnownKeys = {
    "dataset", "graph", "directed", "max_nodes", "probability", "cost_h", "lambda", "omega",
    "gamma", "delta", "k", "algorithms", "mc_samples", "threads", "repetitions", "seed",
    "alpha_spread", "beta", "budget_mode", "aea_comparator", "adls_threshold", "elimination",
    "record_runtime", "output"};

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' || c == '\r' ? ' ' : c;
  }
  return out + "\"";
}

struct PreparedGraph {
  Graph graph;
  CostTable costs;
  SingletonTable singletons;
  double unit_price = 0.0;
};

PreparedGraph prepare_graph(const ExperimentConfig& config, const InfluenceEstimator& estimator) {
  PreparedGraph out;
  Graph g = load_edge_list_file(config.graph_path, config.directed).graph;
  if (config.max_nodes > 0) g = g.prefix_subgraph(config.max_nodes);
  if (config.probability.model == ProbabilitySetting::Model::uniform)
    g = assign_uniform_probability(g, config.probability.p);
  else
    g = assign_trivalency(g, mix_seed(config.seed, kTrivalencyStream));
  out.costs = degree_proportional_costs(g, config.cost_scale);
  out.singletons = singleton_supply(estimator, g);
  out.unit_price = config.beta_unit_price ? *config.beta_unit_price
                                          : median_cost_per_influence(out.costs, out.singletons.influence);
  out.graph = std::move(g);
  return out;
}

}  // namespace

std::string ProbabilitySetting::label() const {
  return model == Model::uniform ? fmt::format("uniform({})", p) : std::string("trivalency");
}

std::size_t ExperimentConfig::run_count() const {
  return lambdas.size() * omegas.size() * gammas.size() * deltas.size() * tolerances.size() *
         algorithms.size() * repetitions;
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  for (const auto& item : j.items())
    if (!kKnownKeys.count(item.key())) throw ArgumentError("unknown config key '" + item.key() + "'");

  ExperimentConfig c;
  try {
    c.dataset = get_or<std::string>(j, "dataset", c.dataset);
    c.graph_path = get_or<std::string>(j, "graph", c.graph_path);
    c.directed = get_or<bool>(j, "directed", c.directed);
    c.max_nodes = get_or<std::size_t>(j, "max_nodes", c.max_nodes);
    if (j.contains("probability")) {
      const json& p = j.at("probability");
      const auto model = get_or<std::string>(p, "model", "uniform");
      if (model == "uniform") {
        c.probability.model = ProbabilitySetting::Model::uniform;
        c.probability.p = get_or<double>(p, "p", 0.1);
        if (!(c.probability.p > 0.0 && c.probability.p <= 1.0))
          throw ArgumentError("uniform probability must lie in (0, 1]");
      } else if (model == "trivalency") {
        c.probability.model = ProbabilitySetting::Model::trivalency;
      } else {
        throw ArgumentError("probability model must be 'uniform' or 'trivalency'");
      }
    }
    c.cost_scale = get_or<double>(j, "cost_h", c.cost_scale);
    c.lambdas = list_or<double>(j, "lambda", c.lambdas);
    if (j.contains("omega")) {
      c.omegas.clear();
      const json& w = j.at("omega");
      for (const json& item : w.is_array() ? w : json::array({w})) {
        OmegaPoint point;
        if (item.is_object()) {
          point.omega = item.at("omega").get<double>();
          if (item.contains("advertisers")) point.advertisers = item.at("advertisers").get<std::size_t>();
        } else {
          point.omega = item.get<double>();
        }
        c.omegas.push_back(point);
      }
    }
    c.gammas = list_or<double>(j, "gamma", c.gammas);
    c.deltas = list_or<double>(j, "delta", c.deltas);
    c.tolerances = list_or<std::size_t>(j, "k", c.tolerances);
    c.algorithms = list_or<std::string>(j, "algorithms", c.algorithms);
    c.samples = get_or<std::uint32_t>(j, "mc_samples", c.samples);
    c.threads = get_or<unsigned>(j, "threads", c.threads);
    c.repetitions = get_or<std::size_t>(j, "repetitions", c.repetitions);
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
    c.alpha_spread = get_or<double>(j, "alpha_spread", c.alpha_spread);
    if (j.contains("beta")) {
      const json& b = j.at("beta");
      c.beta_lo = get_or<double>(b, "lo", c.beta_lo);
      c.beta_hi = get_or<double>(b, "hi", c.beta_hi);
      if (b.contains("unit_price") && !b.at("unit_price").is_null())
        c.beta_unit_price = b.at("unit_price").get<double>();
    }
    c.budget_mode = parse_enum(j, "budget_mode", c.budget_mode, kBudgetModes);
    c.comparator = parse_enum(j, "aea_comparator", c.comparator, kComparators);
    c.threshold = parse_enum(j, "adls_threshold", c.threshold, kThresholds);
    c.accounting = parse_enum(j, "elimination", c.accounting, kAccounting);
    c.record_runtime = get_or<bool>(j, "record_runtime", c.record_runtime);
    c.output_path = get_or<std::string>(j, "output", c.output_path);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config field has the wrong type: ") + e.what());
  }

  if (c.lambdas.empty() || c.omegas.empty() || c.gammas.empty() || c.deltas.empty() ||
      c.tolerances.empty() || c.algorithms.empty())
    throw ArgumentError("sweep lists must be non-empty");
  if (c.repetitions == 0) throw ArgumentError("repetitions must be at least 1");
  if (c.samples == 0) throw ArgumentError("mc_samples must be at least 1");
  for (double g : c.gammas)
    if (!(g >= 0.0 && g <= 1.0)) throw ArgumentError("gamma values must lie in [0, 1]");
  for (double d : c.deltas)
    if (!(d >= 0.0)) throw ArgumentError("delta values must be non-negative");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["dataset"] = c.dataset;
  j["graph"] = c.graph_path;
  j["directed"] = c.directed;
  j["max_nodes"] = c.max_nodes;
  j["probability"] = c.probability.model == ProbabilitySetting::Model::uniform
                         ? json{{"model", "uniform"}, {"p", c.probability.p}}
                         : json{{"model", "trivalency"}};
  j["cost_h"] = c.cost_scale;
  j["lambda"] = c.lambdas;
  json omegas = json::array();
  for (const auto& w : c.omegas) {
    json item{{"omega", w.omega}};
    if (w.advertisers) item["advertisers"] = *w.advertisers;
    omegas.push_back(item);
  }
  j["omega"] = omegas;
  j["gamma"] = c.gammas;
  j["delta"] = c.deltas;
  j["k"] = c.tolerances;
  j["algorithms"] = c.algorithms;
  j["mc_samples"] = c.samples;
  j["threads"] = c.threads;
  j["repetitions"] = c.repetitions;
  j["seed"] = c.seed;
  j["alpha_spread"] = c.alpha_spread;
  j["beta"] = {{"lo", c.beta_lo}, {"hi", c.beta_hi}};
  j["beta"]["unit_price"] = c.beta_unit_price ? json(*c.beta_unit_price) : json(nullptr);
  j["budget_mode"] = enum_name(c.budget_mode, kBudgetModes);
  j["aea_comparator"] = enum_name(c.comparator, kComparators);
  j["adls_threshold"] = enum_name(c.threshold, kThresholds);
  j["elimination"] = enum_name(c.accounting, kAccounting);
  j["record_runtime"] = c.record_runtime;
  if (!c.output_path.empty()) j["output"] = c.output_path;
  return j.dump(2);
}

std::string csv_header() {
  return "dataset,probability,lambda,omega,advertisers,gamma,delta,k,algorithm,repetition,seed,"
         "total_regret,excessive_regret,unsatisfied_regret,eliminated,runtime_seconds,error";
}

std::string csv_line(const ResultRow& r) {
  std::string line = fmt::format("{},{},{},{},{},{},{},{},{},{},{},", csv_escape(r.dataset),
                                 csv_escape(r.probability), r.lambda, r.omega, r.advertisers,
                                 r.gamma, r.delta, r.k, csv_escape(r.algorithm), r.repetition,
                                 r.seed);
  if (r.error.empty()) {
    line += fmt::format("{:.6f},{:.6f},{:.6f},{},{:.6f},", r.total_regret, r.excessive_regret,
                        r.unsatisfied_regret, r.eliminated, r.runtime_seconds);
  } else {
    line += ",,,,," + csv_escape(r.error);
  }
  return line;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << csv_line(r) << '\n';
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  const auto estimator =
      InfluenceEstimator::monte_carlo(config.samples, mix_seed(config.seed, kEstimatorStream), config.threads);

  std::optional<PreparedGraph> prepared;
  std::string graph_error;
  try {
    prepared = prepare_graph(config, estimator);
  } catch (const std::exception& e) {
    graph_error = std::string("graph: ") + e.what();
  }

  std::vector<ResultRow> rows;
  rows.reserve(config.run_count());
  std::uint64_t run_index = 0;
  for (std::size_t li = 0; li < config.lambdas.size(); ++li) {
    for (std::size_t wi = 0; wi < config.omegas.size(); ++wi) {
      const OmegaPoint& w = config.omegas[wi];
      std::size_t count = 0;
      std::string pairing_error;
      try {
        count = pair_omega_with_count(w.omega, w.advertisers);
      } catch (const std::exception& e) {
        pairing_error = std::string("scenario: ") + e.what();
      }
      for (double gamma : config.gammas) {
        for (double delta : config.deltas) {
          for (std::size_t k : config.tolerances) {
            for (const auto& algorithm_name : config.algorithms) {
              for (std::size_t rep = 0; rep < config.repetitions; ++rep, ++run_index) {
                ResultRow row;
                row.dataset = config.dataset;
                row.probability = config.probability.label();
                row.lambda = config.lambdas[li];
                row.omega = w.omega;
                row.advertisers = count;
                row.gamma = gamma;
                row.delta = delta;
                row.k = k;
                row.algorithm = algorithm_name;
                row.repetition = rep;
                row.seed = mix_seed(config.seed, run_index);
                if (!graph_error.empty()) row.error = graph_error;
                else if (!pairing_error.empty()) row.error = pairing_error;
                if (!row.error.empty()) {
                  rows.push_back(std::move(row));
                  continue;
                }
                try {
                  const Algorithm algorithm = parse_algorithm(algorithm_name);
                  // One population per (lambda, omega, repetition), shared by
                  // every algorithm and regret setting.
                  ScenarioParams sp;
                  sp.lambda = row.lambda;
                  sp.omega = w.omega;
                  sp.advertisers = count;
                  sp.alpha_spread = config.alpha_spread;
                  sp.beta = BetaPolicy{prepared->unit_price, config.beta_lo, config.beta_hi};
                  sp.seed = mix_seed(mix_seed(config.seed, kScenarioStream),
                                     (li * config.omegas.size() + wi) * config.repetitions + rep);
                  const auto advertisers = generate_advertisers(prepared->singletons.supply, sp);

                  AllocatorConfig ac;
                  ac.regret = RegretParams{gamma, delta};
                  ac.budget_mode = config.budget_mode;
                  ac.tolerance = k;
                  ac.comparator = config.comparator;
                  ac.threshold = config.threshold;
                  ac.accounting = config.accounting;
                  const AllocationProblem problem(prepared->graph, prepared->costs, advertisers,
                                                  estimator, prepared->singletons);
                  const Allocation allocation = allocate(algorithm, problem, ac, row.seed);
                  const RegretSummary summary = summarize(allocation, advertisers, ac.regret, ac.accounting);
                  row.total_regret = summary.total;
                  row.excessive_regret = summary.excessive;
                  row.unsatisfied_regret = summary.unsatisfied;
                  row.eliminated = summary.eliminated;
                  row.runtime_seconds = config.record_runtime ? allocation.seconds : 0.0;
                } catch (const std::exception& e) {
                  row.error = e.what();
                }
                rows.push_back(std::move(row));
              }
            }
          }
        }
      }
    }
  }
  return rows;
}

CheckReport oracle_check(std::uint64_t seed, std::size_t instances, std::size_t nodes,
                         std::size_t advertisers) {
  CheckReport report;
  report.ok = true;
  std::ostringstream out;
  out << fmt::format("{:>8} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}\n", "instance", "oracle",
                     "bg", "aea", "adls", "random", "topk");
  const auto estimator = InfluenceEstimator::exact();
  AllocatorConfig config;
  config.budget_mode = BudgetMode::strict;
  // Every advertiser holds a seed set, possibly empty, in the optimum, so
  // eliminated advertisers are charged like empty ones.
  config.accounting = EliminationAccounting::charge_full_budget;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::uint64_t instance_seed = mix_seed(seed, i);
    const TinyInstance inst = random_tiny_instance(instance_seed, nodes, advertisers);
    const OracleResult best = brute_force_optimal(inst.graph, inst.costs, inst.advertisers, config.regret);
    const AllocationProblem problem(inst.graph, inst.costs, inst.advertisers, estimator);
    out << fmt::format("{:>8} {:>10.4f}", i, best.regret);
    for (Algorithm a : {Algorithm::bg, Algorithm::aea, Algorithm::adls, Algorithm::random, Algorithm::topk}) {
      const Allocation alloc = allocate(a, problem, config, instance_seed);
      const double total = total_regret(alloc, inst.advertisers, config.regret, config.accounting);
      const bool beats = total < best.regret - 1e-9;
      if (beats) report.ok = false;
      out << fmt::format(" {:>9.4f}{}", total, beats ? "!" : " ");
    }
    out << '\n';
  }
  out << (report.ok ? "all heuristics >= oracle optimum\n"
                    : "a heuristic beat the oracle optimum (marked '!')\n");
  report.text = out.str();
  return report;
}

ExampleInstance worked_example() {
  ExampleInstance ex;
  ex.values = {4, 6, 5, 4, 5, 2, 3, 2, 3, 2, 2, 5};
  ex.graph = Graph::isolated(ex.values.size());
  ex.costs = CostTable({6, 9, 7.5, 6, 7.5, 3, 4.5, 3, 4.5, 3, 3, 7.5}, 0.0);
  const double demand[] = {10, 8, 6, 10, 9, 5};
  const double budget[] = {18, 17, 10, 17, 11, 5};
  for (std::size_t i = 0; i < 6; ++i) ex.advertisers.push_back({i, demand[i], budget[i]});
  return ex;
}

namespace {

std::string describe_allocation(const Allocation& alloc, std::span<const Advertiser> ads) {
  std::string out = fmt::format("  {}:\n", alloc.algorithm);
  for (const auto& e : alloc.entries) {
    std::string seeds;
    for (NodeId u : e.seeds) seeds += fmt::format("{}u{}", seeds.empty() ? "" : ",", u + 1);
    const bool eliminated = e.status == AdvertiserStatus::eliminated;
    out += fmt::format("    a{}  S={{{}}}  I={}  demand={}  satisfied={}  regret={} ({:.6f}){}\n",
                       e.advertiser + 1, seeds, e.influence, ads[e.advertiser].demand,
                       e.influence >= ads[e.advertiser].demand ? "Y" : "N",
                       to_string(e.regret.category), e.regret.total(),
                       eliminated ? "  [eliminated]" : "");
  }
  return out;
}

}  // namespace

CheckReport replicate_example() {
  const ExampleInstance ex = worked_example();
  const auto estimator = InfluenceEstimator::additive(ex.values);
  const AllocationProblem problem(ex.graph, ex.costs, ex.advertisers, estimator);
  AllocatorConfig config;  // gamma 0.5, delta 0.01, overdraft
  config.tolerance = 1;

  std::vector<std::string> failures;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  };

  const Allocation bg = bg_allocate(problem, config);
  const Allocation aea = aea_allocate(problem, config);
  const Allocation adls = adls_allocate(problem, config);
  AllocatorConfig positive = config;
  positive.threshold = ThresholdMode::positive;
  const Allocation adls_positive = adls_allocate(problem, positive);

  const auto& e = bg.entries;
  expect(e[0].regret.category == RegretCategory::zero, "BG: a1 should have zero regret");
  expect(e[1].regret.category == RegretCategory::zero, "BG: a2 should have zero regret");
  for (std::size_t i : {2, 3})
    expect(e[i].regret.category != RegretCategory::unsatisfied,
           fmt::format("BG: a{} should be zero or excessive", i + 1));
  expect(e[4].regret.category == RegretCategory::unsatisfied, "BG: a5 should be unsatisfied");
  expect(e[5].regret.category == RegretCategory::unsatisfied, "BG: a6 should be unsatisfied");
  expect(e[5].seeds.empty(), "BG: a6 should receive no seeds");

  std::vector<std::size_t> eliminated;
  for (const auto& x : aea.entries)
    if (x.status == AdvertiserStatus::eliminated) eliminated.push_back(x.advertiser);
  expect(eliminated == std::vector<std::size_t>{5}, "AEA(k=1): exactly a6 should be eliminated");

  const RegretParams& p = config.regret;
  const double bg_total = total_regret(bg, ex.advertisers, p);
  const double adls_total = total_regret(adls, ex.advertisers, p);
  const double adls_positive_total = total_regret(adls_positive, ex.advertisers, p);
  expect(adls_total <= bg_total, "ADLS(mean) total regret should not exceed BG");
  expect(adls_positive_total <= bg_total, "ADLS(positive) total regret should not exceed BG");

  std::string text = "worked example: additive influence, gamma=0.5, delta=0.01, overdraft budgets\n";
  text += describe_allocation(bg, ex.advertisers);
  text += describe_allocation(aea, ex.advertisers);
  text += describe_allocation(adls, ex.advertisers);
  text += fmt::format("  totals: bg={:.6f} aea={:.6f} adls(mean)={:.6f} adls(positive)={:.6f}\n",
                      bg_total, total_regret(aea, ex.advertisers, p), adls_total, adls_positive_total);
  for (const auto& f : failures) text += "  FAILED: " + f + "\n";
  text += failures.empty() ? "all checks passed\n" : "checks failed\n";
  return {failures.empty(), text};
}

}  // namespace seedalloc
