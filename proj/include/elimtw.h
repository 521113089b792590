#ifndef ELIMTW_H
#define ELIMTW_H

/* C interface to the elimtw exact treewidth solver. All functions are
 * thread-compatible: distinct graph/result objects may be used from
 * distinct threads, a single object must not be shared without locking.
 * Vertex ids are 0-based here; the text formats are 1-based. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ELIMTW_API __declspec(dllexport)
#else
#define ELIMTW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etw_status {
    ETW_OK = 0,
    ETW_ERROR_PARSE = 1,
    ETW_ERROR_INVALID_ARGUMENT = 2,
    ETW_ERROR_INTERNAL = 3
} etw_status;

typedef enum etw_format {
    ETW_FORMAT_AUTO = 0,
    ETW_FORMAT_GR = 1,
    ETW_FORMAT_DIMACS = 2
} etw_format;

typedef enum etw_dedup { ETW_DEDUP_BLOOM = 0, ETW_DEDUP_EXACT = 1 } etw_dedup;

typedef enum etw_split {
    ETW_SPLIT_NONE = 0,
    ETW_SPLIT_CONNECTED = 1,
    ETW_SPLIT_BICONNECTED = 2
} etw_split;

typedef enum etw_result_kind {
    ETW_RESULT_EXACT = 0,
    ETW_RESULT_LOWER_BOUND = 1
} etw_result_kind;

typedef struct etw_graph etw_graph;
typedef struct etw_result etw_result;

typedef struct etw_options {
    etw_dedup dedup;
    etw_split split;
    int use_mmw;
    int use_clique;
    int use_improvement;
    int thread_count;
    uint64_t max_layer_states;
    int bloom_bits_per_element;
    int bloom_hashes;
    int start_k;    /* -1 selects the computed lower bound */
    int emit_order; /* nonzero: reconstruct an optimal elimination order */
} etw_options;

/* Fills *opts with the defaults; call before overriding fields. */
ELIMTW_API void etw_options_init(etw_options* opts);

/* Parses `len` bytes of graph text. On failure returns ETW_ERROR_PARSE and
 * copies a message (with a line number) into err when provided. */
ELIMTW_API etw_status etw_graph_parse(const char* text, size_t len,
                                      etw_format format, etw_graph** out,
                                      char* err, size_t err_len);
ELIMTW_API void etw_graph_free(etw_graph* g);
ELIMTW_API int etw_graph_vertex_count(const etw_graph* g);
ELIMTW_API long long etw_graph_edge_count(const etw_graph* g);

ELIMTW_API etw_status etw_solve(const etw_graph* g, const etw_options* opts,
                                etw_result** out, char* err, size_t err_len);
ELIMTW_API void etw_result_free(etw_result* r);

ELIMTW_API etw_result_kind etw_result_kind_of(const etw_result* r);
/* The treewidth for ETW_RESULT_EXACT, otherwise a proven lower bound. */
ELIMTW_API int etw_result_value(const etw_result* r);
/* Optimal elimination order when requested and exact; length 0 otherwise.
 * The pointer stays owned by the result. */
ELIMTW_API size_t etw_result_order_len(const etw_result* r);
ELIMTW_API const int* etw_result_order(const etw_result* r);
/* JSON run report; built on first call, owned by the result. */
ELIMTW_API const char* etw_result_stats_json(etw_result* r);

/* Computes the width of an elimination order (len must equal the vertex
 * count) and validates the tree decomposition it induces. width_out and
 * decomposition_valid_out may be NULL. */
ELIMTW_API etw_status etw_check_order(const etw_graph* g, const int* order,
                                      size_t len, int* width_out,
                                      int* decomposition_valid_out, char* err,
                                      size_t err_len);

ELIMTW_API const char* etw_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ELIMTW_H */
