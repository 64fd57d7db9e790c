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

#include "seedalloc/seedalloc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "seedalloc/errors.hpp"
#include "seedalloc/graph.hpp"
#include "seedalloc/harness.hpp"
#include "seedalloc/influence.hpp"

struct sa_graph {
  seedalloc::Graph graph;
};

struct sa_config {
  seedalloc::ExperimentConfig config;
};

namespace {

thread_local std::string last_error;

sa_status fail(sa_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the library's exception types to status codes.
template <typename F>
sa_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const seedalloc::ParseError& e) {
    return fail(SA_ERR_PARSE, e.what());
  } catch (const seedalloc::RefusalError& e) {
    return fail(SA_ERR_REFUSED, e.what());
  } catch (const seedalloc::GenerationError& e) {
    return fail(SA_ERR_GENERATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SA_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    // Loaders report unopenable files as plain runtime_error.
    return fail(SA_ERR_IO, e.what());
  } catch (...) {
    return fail(SA_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sa_last_error(void) { return last_error.c_str(); }

const char* sa_status_name(sa_status status) {
  switch (status) {
    case SA_OK: return "ok";
    case SA_ERR_ARGUMENT: return "invalid argument";
    case SA_ERR_PARSE: return "parse error";
    case SA_ERR_IO: return "i/o error";
    case SA_ERR_REFUSED: return "refused";
    case SA_ERR_GENERATION: return "generation error";
    case SA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sa_string_free(char* text) { std::free(text); }

sa_status sa_graph_load(const char* path, int directed, sa_graph** out) {
  if (path == nullptr || out == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto loaded = seedalloc::load_edge_list_file(path, directed != 0);
    *out = new sa_graph{std::move(loaded.graph)};
    return SA_OK;
  });
}

void sa_graph_free(sa_graph* graph) { delete graph; }

sa_status sa_graph_stats_get(const sa_graph* graph, sa_graph_stats* out) {
  if (graph == nullptr || out == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto s = seedalloc::graph_stats(graph->graph);
    *out = sa_graph_stats{s.nodes, s.edges, s.average_degree, s.max_degree};
    return SA_OK;
  });
}

sa_status sa_graph_set_uniform_probability(sa_graph* graph, double p) {
  if (graph == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    graph->graph = seedalloc::assign_uniform_probability(graph->graph, p);
    return SA_OK;
  });
}

sa_status sa_graph_influence(const sa_graph* graph, const uint32_t* seeds, size_t count,
                             uint32_t samples, uint64_t seed, double* out) {
  if (graph == nullptr || out == nullptr || (seeds == nullptr && count > 0))
    return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto estimator = samples == 0 ? seedalloc::InfluenceEstimator::exact()
                                        : seedalloc::InfluenceEstimator::monte_carlo(samples, seed);
    *out = estimator.estimate(graph->graph, {seeds, count});
    return SA_OK;
  });
}

sa_status sa_config_load(const char* path, sa_config** out) {
  if (path == nullptr || out == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sa_config{seedalloc::load_config(path)};
    return SA_OK;
  });
}

sa_status sa_config_parse(const char* json_text, sa_config** out) {
  if (json_text == nullptr || out == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sa_config{seedalloc::parse_config(json_text)};
    return SA_OK;
  });
}

void sa_config_free(sa_config* config) { delete config; }

sa_status sa_config_to_json(const sa_config* config, char** out) {
  if (config == nullptr || out == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(seedalloc::config_to_json(config->config));
    return SA_OK;
  });
}

sa_status sa_run(const sa_config* config, const char* csv_path, size_t* rows, size_t* error_rows) {
  if (config == nullptr || csv_path == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto results = seedalloc::run_experiment(config->config);
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) return fail(SA_ERR_IO, std::string("cannot open '") + csv_path + "' for writing");
    seedalloc::write_csv(out, results);
    out.close();
    if (!out) return fail(SA_ERR_IO, std::string("failed writing '") + csv_path + "'");
    std::size_t errors = 0;
    for (const auto& r : results) errors += r.error.empty() ? 0 : 1;
    if (rows != nullptr) *rows = results.size();
    if (error_rows != nullptr) *error_rows = errors;
    return SA_OK;
  });
}

sa_status sa_oracle_check(uint64_t seed, size_t instances, size_t nodes, size_t advertisers,
                          int* passed, char** report) {
  if (passed == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto result = seedalloc::oracle_check(seed, instances, nodes, advertisers);
    *passed = result.ok ? 1 : 0;
    if (report != nullptr) *report = copy_string(result.text);
    return SA_OK;
  });
}

sa_status sa_replicate_example(int* passed, char** report) {
  if (passed == nullptr) return fail(SA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto result = seedalloc::replicate_example();
    *passed = result.ok ? 1 : 0;
    if (report != nullptr) *report = copy_string(result.text);
    return SA_OK;
  });
}

}  // extern "C"
