/* Copyright 2026 The seedalloc Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libseedalloc. Every call returns an sa_status; on failure
 * sa_last_error() describes it until the next call on the same thread.
 * Strings handed out by the library are released with sa_string_free. */

#ifndef SEEDALLOC_SEEDALLOC_H_
#define SEEDALLOC_SEEDALLOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SA_API __declspec(dllexport)
#else
#define SA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
  SA_OK = 0,
  SA_ERR_ARGUMENT = 1,   /* invalid argument or config */
  SA_ERR_PARSE = 2,      /* malformed input file */
  SA_ERR_IO = 3,         /* file could not be opened or written */
  SA_ERR_REFUSED = 4,    /* instance beyond exact/oracle limits */
  SA_ERR_GENERATION = 5, /* scenario generation failed */
  SA_ERR_INTERNAL = 6,
} sa_status;

typedef struct sa_graph sa_graph;
typedef struct sa_config sa_config;

typedef struct sa_graph_stats {
  size_t nodes;
  size_t edges;
  double average_degree;
  size_t max_degree;
} sa_graph_stats;

SA_API const char* sa_last_error(void);
SA_API const char* sa_status_name(sa_status status);
SA_API void sa_string_free(char* text);

/* Graphs. `directed` is 0 or 1. */
SA_API sa_status sa_graph_load(const char* path, int directed, sa_graph** out);
SA_API void sa_graph_free(sa_graph* graph);
SA_API sa_status sa_graph_stats_get(const sa_graph* graph, sa_graph_stats* out);
/* Replaces every arc probability with p. */
SA_API sa_status sa_graph_set_uniform_probability(sa_graph* graph, double p);
/* Influence of `seeds` (dense ids). samples == 0 selects exact enumeration. */
SA_API sa_status sa_graph_influence(const sa_graph* graph, const uint32_t* seeds, size_t count,
                                    uint32_t samples, uint64_t seed, double* out);

/* Experiment configs (JSON). */
SA_API sa_status sa_config_load(const char* path, sa_config** out);
SA_API sa_status sa_config_parse(const char* json_text, sa_config** out);
SA_API void sa_config_free(sa_config* config);
SA_API sa_status sa_config_to_json(const sa_config* config, char** out);
/* Runs the sweep and writes the CSV to `csv_path`. `rows` and `error_rows`
 * may be NULL. Error rows do not make the call fail. */
SA_API sa_status sa_run(const sa_config* config, const char* csv_path, size_t* rows,
                        size_t* error_rows);

/* Checks. `passed` receives 1 when every check held; `report` is a
 * human-readable table to be released with sa_string_free. */
SA_API sa_status sa_oracle_check(uint64_t seed, size_t instances, size_t nodes,
                                 size_t advertisers, int* passed, char** report);
SA_API sa_status sa_replicate_example(int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* SEEDALLOC_SEEDALLOC_H_ */
