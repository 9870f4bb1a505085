// Copyright 2026 The tokaut Authors
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


/* C interface to the tokaut library.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Every fallible function returns a tka_status; on failure the message is
 * available from tka_last_error() on the calling thread until the next
 * call into the library. Strings returned through char** out-parameters
 * are owned by the caller and released with tka_string_free().
 */

#ifndef TOKAUT_TOKAUT_H_
#define TOKAUT_TOKAUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TOKAUT_BUILDING_LIBRARY)
#define TKA_API __attribute__((visibility("default")))
#else
#define TKA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Numeric values match the command-line exit codes. */
typedef enum tka_status {
  TKA_OK = 0,
  TKA_ERR_ARGUMENT = 2,  /* malformed input or out-of-range parameter */
  TKA_ERR_SCALE = 3,     /* refused by a scale guard */
  TKA_ERR_VERIFY = 4,    /* a verification check failed; report still set */
  TKA_ERR_IO = 5,
  TKA_ERR_INTERNAL = 6,
} tka_status;

typedef struct tka_graph tka_graph;
typedef struct tka_factorization tka_factorization;

typedef struct tka_limits {
  int64_t max_vertices; /* token-graph vertex ceiling */
  int64_t max_nodes;    /* search-tree node ceiling */
} tka_limits;

TKA_API const char* tka_version(void);
TKA_API const char* tka_last_error(void);
TKA_API void tka_string_free(char* s);
TKA_API tka_limits tka_default_limits(void);

/* Graphs. */
TKA_API tka_status tka_graph_from_specifier(const char* spec, tka_graph** out);
TKA_API tka_status tka_graph_from_edge_list(const char* text, tka_graph** out);
TKA_API tka_status tka_graph_read_file(const char* path, tka_graph** out);
TKA_API void tka_graph_free(tka_graph* g);
TKA_API int tka_graph_num_vertices(const tka_graph* g);
TKA_API int64_t tka_graph_num_edges(const tka_graph* g);
TKA_API tka_status tka_graph_to_edge_list(const tka_graph* g, char** out);
TKA_API tka_status tka_graph_is_isomorphic(const tka_graph* g,
                                           const tka_graph* h,
                                           int* isomorphic);

/* F_k(base) and its "rank: {v0,...}" mapping text. `mapping` may be NULL. */
TKA_API tka_status tka_token_graph(const tka_graph* base, int k,
                                   const tka_limits* limits, tka_graph** out,
                                   char** mapping);

/* JSON report: order, generator images, node count, wall time. */
TKA_API tka_status tka_automorphism_report(const tka_graph* g,
                                           const tka_limits* limits,
                                           char** json);

/* JSON report of the constructed generators and the predicted order. */
TKA_API tka_status tka_bipartite_generators_report(int m, int n, int k,
                                                   const tka_limits* limits,
                                                   char** json);
/* `factors` is a '+'-separated list of graph specifiers, e.g. "k2+path:3". */
TKA_API tka_status tka_product_generators_report(const char* factors,
                                                 const tka_limits* limits,
                                                 char** json);

/* Verification reports. The JSON is set whenever the instance ran, and the
 * status is TKA_ERR_VERIFY when an asserted check failed. */
TKA_API tka_status tka_verify_bipartite(int m, int n, int k,
                                        const tka_limits* limits, char** json);
TKA_API tka_status tka_verify_cube(int r, const tka_limits* limits,
                                   char** json);
TKA_API tka_status tka_verify_product(const char* factors,
                                      const tka_limits* limits, char** json);

/* Prime factor decomposition of a connected graph. */
TKA_API tka_status tka_factor(const tka_graph* g, tka_factorization** out);
TKA_API void tka_factorization_free(tka_factorization* f);
TKA_API size_t tka_factorization_size(const tka_factorization* f);
/* Borrowed handle, valid while `f` lives. */
TKA_API const tka_graph* tka_factorization_factor(const tka_factorization* f,
                                                  size_t i);
/* JSON with the factor list and the coordinate witness. */
TKA_API tka_status tka_factorization_report(const tka_factorization* f,
                                            char** json);

#ifdef __cplusplus
}
#endif

#endif /* TOKAUT_TOKAUT_H_ */
